#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "saxl/error.hpp"
#include "saxl/hypergraph.hpp"
#include "saxl/partition.hpp"

namespace saxl {

/// Arbitrary-precision signed integer used for every determinant product,
/// character value and class sum.
using ExactScalar = boost::multiprecision::cpp_int;

using IntVector = std::vector<std::int64_t>;

/// Determinant of the m x m matrix whose columns are the first m entries of
/// each of the m given vectors. Fraction-free (Bareiss) elimination.
inline ExactScalar sdet(std::span<const IntVector> vectors) {
    const std::size_t m = vectors.size();
    if (m == 0)
        throw Error(ErrorCode::BadShape, "sdet of an empty list");
    const std::size_t len = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != len)
            throw Error(ErrorCode::BadShape, "sdet vectors differ in length");
    if (m > len)
        throw Error(ErrorCode::BadShape,
                    std::to_string(m) + " vectors of length " + std::to_string(len) + " give no square minor");

    // a[i][j] = entry i of vector j
    std::vector<std::vector<ExactScalar>> a(m, std::vector<ExactScalar>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = vectors[j][i];

    int sign = 1;
    ExactScalar prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < m && a[p][k] == 0)
                ++p;
            if (p == m)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

inline ExactScalar sdet(std::initializer_list<IntVector> vectors) {
    std::vector<IntVector> v(vectors);
    return sdet(std::span<const IntVector>(v));
}

/// Standard basis vector e_i (1-based) of length n.
inline IntVector basis_vector(int n, int i) {
    IntVector e(n, 0);
    e.at(i - 1) = 1;
    return e;
}

/// Vandermonde rows c_i = (1, i, i^2, ..., i^(n-1)) for i = 1..n. Any k of
/// them with distinct indices have a nonzero leading k x k minor.
inline std::vector<IntVector> generic_c_vectors(int n) {
    if (n < 1)
        throw Error(ErrorCode::BadShape, "generic vectors need n >= 1");
    std::vector<IntVector> out(n, IntVector(n));
    for (int i = 1; i <= n; ++i) {
        std::int64_t power = 1;
        for (int k = 0; k < n; ++k) {
            out[i - 1][k] = power;
            power *= i;
        }
    }
    return out;
}

/// Vectors a_x, b_x, c_x (x = 1..d, stored 0-based) in ambient dimension n.
struct VectorAssignment {
    int n = 0;
    std::vector<IntVector> a, b, c;
};

namespace detail {

inline ExactScalar layer_product(const Layer& layer, const std::vector<IntVector>& vecs) {
    ExactScalar product = 1;
    std::vector<IntVector> cols;
    for (const auto& edge : layer) {
        cols.clear();
        for (int v : edge)
            cols.push_back(vecs[v - 1]);
        product *= sdet(std::span<const IntVector>(cols));
        if (product == 0)
            break;
    }
    return product;
}

} // namespace detail

/// Product over all three layers of sdet over each edge, vertices in
/// increasing id order.
inline ExactScalar contract(const YoungHypergraph& h, const VectorAssignment& va) {
    const auto d = static_cast<std::size_t>(h.d);
    if (va.a.size() != d || va.b.size() != d || va.c.size() != d)
        throw Error(ErrorCode::BadShape, "assignment does not cover " + std::to_string(h.d) + " vertices");
    for (const auto* vecs : {&va.a, &va.b, &va.c})
        for (const auto& v : *vecs)
            if (static_cast<int>(v.size()) != va.n)
                throw Error(ErrorCode::BadShape, "assignment vectors must have length n");
    for (const auto& layer : h.layers)
        for (const auto& edge : layer)
            if (static_cast<int>(edge.size()) > va.n)
                throw Error(ErrorCode::BadShape, "edge of size " + std::to_string(edge.size()) +
                                                     " exceeds ambient dimension " + std::to_string(va.n));
    ExactScalar value = detail::layer_product(h.layers[0], va.a);
    if (value != 0)
        value *= detail::layer_product(h.layers[1], va.b);
    if (value != 0)
        value *= detail::layer_product(h.layers[2], va.c);
    return value;
}

/// n! (n-1)! ... 2! 1!
inline ExactScalar theta(int n) {
    if (n < 1)
        throw Error(ErrorCode::BadShape, "theta needs n >= 1");
    ExactScalar result = 1, fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        result *= fact;
    }
    return result;
}

/// Placement of values 1..n on the d vertices, value i used n+1-i times.
struct TauMap {
    std::vector<int> values; ///< indexed by vertex id - 1

    friend bool operator==(const TauMap&, const TauMap&) = default;
};

inline bool is_valid_tau(int n, const TauMap& tau) {
    if (static_cast<int>(tau.values.size()) != staircase_size(n))
        return false;
    std::vector<int> count(n + 1, 0);
    for (int v : tau.values) {
        if (v < 1 || v > n)
            return false;
        ++count[v];
    }
    for (int i = 1; i <= n; ++i)
        if (count[i] != n + 1 - i)
            return false;
    return true;
}

/// d! / (n! (n-1)! ... 1!)
inline ExactScalar tau_count(int n) {
    ExactScalar dfact = 1;
    for (int k = 2; k <= staircase_size(n); ++k)
        dfact *= k;
    return dfact / theta(n);
}

inline constexpr int default_tau_cap = 5;

/// Streams every tau map once, in lexicographic order of the value word.
class TauStream {
public:
    explicit TauStream(int n, int cap = default_tau_cap) {
        if (n < 1)
            throw Error(ErrorCode::BadShape, "tau enumeration needs n >= 1");
        if (n > cap)
            throw Error(ErrorCode::CapExceeded,
                        "tau enumeration for n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
        for (int i = 1; i <= n; ++i)
            current_.values.insert(current_.values.end(), n + 1 - i, i);
    }

    /// Current map, or nullptr once exhausted.
    const TauMap* get() const noexcept { return done_ ? nullptr : &current_; }

    void advance() {
        if (!done_)
            done_ = !std::next_permutation(current_.values.begin(), current_.values.end());
    }

private:
    TauMap current_;
    bool done_ = false;
};

inline std::vector<TauMap> enumerate_tau(int n, int cap = default_tau_cap) {
    std::vector<TauMap> out;
    for (TauStream s(n, cap); s.get(); s.advance())
        out.push_back(*s.get());
    return out;
}

/// tau = beta on the grid.
inline TauMap beta_tau(int n) { return TauMap{DeltaGrid(n).betas()}; }

/// a_x = b_x = e_{tau(x)}, c_x = generic c_{tau(x)}.
inline VectorAssignment assignment_from_tau(int n, const TauMap& tau) {
    const auto generic = generic_c_vectors(n);
    VectorAssignment va;
    va.n = n;
    for (int value : tau.values) {
        va.a.push_back(basis_vector(n, value));
        va.b.push_back(basis_vector(n, value));
        va.c.push_back(generic[value - 1]);
    }
    return va;
}

inline constexpr int default_brute_n_cap = 4;

namespace detail {

inline void require_dominating(int n, const Partition& nu) {
    const Partition rho = staircase(n);
    if (nu.size() != rho.size())
        throw Error(ErrorCode::SizeMismatch,
                    nu.to_string() + " does not have " + std::to_string(rho.size()) + " boxes");
    if (!dominates(nu, rho))
        throw Error(ErrorCode::NotDominating, nu.to_string() + " does not dominate " + rho.to_string());
}

} // namespace detail

/// theta times the sum over every tau map of the contraction against the
/// staircase hypergraph. Workers take interleaved slices of the tau stream;
/// the exact sum makes the result independent of `jobs`.
inline ExactScalar symmetrized_contraction_bruteforce(int n, const Partition& nu, int cap = default_brute_n_cap,
                                                      int jobs = 1) {
    detail::require_dominating(n, nu);
    if (n > cap)
        throw Error(ErrorCode::CapExceeded,
                    "brute-force contraction for n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const YoungHypergraph h = staircase_hypergraph(n, nu);
    jobs = std::max(1, jobs);

    std::vector<ExactScalar> partial(jobs);
    auto work = [&](int worker) {
        std::size_t index = 0;
        for (TauStream s(n, cap); s.get(); s.advance(), ++index)
            if (static_cast<int>(index % jobs) == worker)
                partial[worker] += contract(h, assignment_from_tau(n, *s.get()));
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back(work, w);
    }
    ExactScalar sum = 0;
    for (const auto& p : partial)
        sum += p;
    return theta(n) * sum;
}

/// theta times the single tau = beta term for the given hypergraph. Every
/// edge minor is checked: layers 1 and 2 must give +-1 and layer 3 nonzero.
inline ExactScalar beta_term(int n, const YoungHypergraph& h) {
    const VectorAssignment va = assignment_from_tau(n, beta_tau(n));
    if (h.d != static_cast<int>(va.a.size()))
        throw Error(ErrorCode::BadShape, "hypergraph is not on the staircase grid");
    ExactScalar value = theta(n);
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& vecs = k == 0 ? va.a : k == 1 ? va.b : va.c;
        for (const auto& edge : h.layers[k]) {
            cols.clear();
            for (int v : edge)
                cols.push_back(vecs[v - 1]);
            ExactScalar minor = sdet(std::span<const IntVector>(cols));
            if (k < 2 ? abs(minor) != 1 : minor == 0)
                throw Error(ErrorCode::InternalInconsistency,
                            "unexpected minor " + minor.str() + " in layer " + std::to_string(k + 1));
            value *= minor;
        }
    }
    return value;
}

inline ExactScalar symmetrized_contraction_fast(int n, const Partition& nu) {
    detail::require_dominating(n, nu);
    return beta_term(n, staircase_hypergraph(n, nu));
}

} // namespace saxl
