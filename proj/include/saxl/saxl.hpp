#pragma once

#include "saxl/certificate.hpp"
#include "saxl/contraction.hpp"
#include "saxl/error.hpp"
#include "saxl/hypergraph.hpp"
#include "saxl/kron_oracle.hpp"
#include "saxl/partition.hpp"
#include "saxl/tableau.hpp"
