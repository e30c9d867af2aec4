#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "saxl/contraction.hpp"

using saxl::ExactScalar;
using saxl::IntVector;
using saxl::Partition;

namespace {

std::vector<Partition> dominating(int n) {
    std::vector<Partition> out;
    for (const auto& nu : saxl::enumerate_partitions(saxl::staircase_size(n)))
        if (saxl::dominates(nu, saxl::staircase(n)))
            out.push_back(nu);
    return out;
}

ExactScalar sdet_of(const std::vector<IntVector>& v) { return saxl::sdet(std::span<const IntVector>(v)); }

} // namespace

TEST(Sdet, TwoByThreeExample) { EXPECT_EQ(saxl::sdet({{1, 0, 3}, {2, -1, 1}}), -1); }

TEST(Sdet, IdentityAndRepeats) {
    for (int k = 1; k <= 5; ++k) {
        std::vector<IntVector> cols;
        for (int i = 1; i <= k; ++i)
            cols.push_back(saxl::basis_vector(6, i));
        EXPECT_EQ(sdet_of(cols), 1);
        if (k > 1) {
            cols[1] = cols[0];
            EXPECT_EQ(sdet_of(cols), 0);
        }
    }
}

TEST(Sdet, BadShape) {
    EXPECT_THROW(saxl::sdet({{1}, {2}}), saxl::Error);
    EXPECT_THROW(saxl::sdet({{1, 2}, {2}}), saxl::Error);
    EXPECT_THROW(sdet_of({}), saxl::Error);
}

TEST(Sdet, MatchesPermutationExpansion) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> zero(0, 3);
    for (int trial = 0; trial < 400; ++trial) {
        const int m = 1 + trial % 6;
        const int len = m + trial % 3;
        std::vector<IntVector> cols(m, IntVector(len));
        for (auto& c : cols)
            for (auto& x : c)
                x = zero(rng) == 0 ? 0 : entry(rng);
        EXPECT_EQ(sdet_of(cols), saxl::oracle::leibniz_det(cols));
    }
}

TEST(SdetProperty, BasisMinorNonzeroExactlyForPermutations) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= std::min(4, n); ++k) {
            std::vector<int> idx(k, 1);
            while (true) {
                std::vector<IntVector> cols;
                for (int j : idx)
                    cols.push_back(saxl::basis_vector(n, j));
                std::vector<int> sorted = idx;
                std::sort(sorted.begin(), sorted.end());
                bool is_perm = true;
                for (int i = 0; i < k; ++i)
                    is_perm &= sorted[i] == i + 1;
                const ExactScalar det = sdet_of(cols);
                EXPECT_EQ(det != 0, is_perm);
                if (is_perm) {
                    EXPECT_EQ(abs(det), 1);
                }
                int pos = k - 1;
                while (pos >= 0 && idx[pos] == n)
                    idx[pos--] = 1;
                if (pos < 0)
                    break;
                ++idx[pos];
            }
        }
}

TEST(GenericVectors, Vandermonde) {
    auto c = saxl::generic_c_vectors(2);
    EXPECT_EQ(c, (std::vector<IntVector>{{1, 1}, {1, 2}}));
    EXPECT_EQ(saxl::sdet({c[0], c[1]}), 1);
    EXPECT_EQ(saxl::sdet({c[1], c[1]}), 0);
    // distinct nodes give the Vandermonde product
    auto c5 = saxl::generic_c_vectors(5);
    EXPECT_EQ(saxl::sdet({c5[1], c5[3], c5[4]}), (4 - 2) * (5 - 2) * (5 - 4));
    EXPECT_EQ(saxl::sdet({c5[4], c5[1]}), 2 - 5);
}

TEST(Theta, Values) {
    EXPECT_EQ(saxl::theta(4), 288);
    EXPECT_EQ(saxl::theta(1), 1);
    EXPECT_EQ(saxl::theta(2), 2);
    EXPECT_EQ(saxl::theta(6), ExactScalar(720) * 120 * 24 * 6 * 2);
}

TEST(Tau, Counts) {
    EXPECT_EQ(saxl::enumerate_tau(1).size(), 1u);
    EXPECT_EQ(saxl::enumerate_tau(2).size(), 3u);
    EXPECT_EQ(saxl::enumerate_tau(3).size(), 60u);
    EXPECT_EQ(saxl::enumerate_tau(4).size(), 12600u);
    EXPECT_EQ(saxl::tau_count(4), 12600);
    EXPECT_EQ(saxl::tau_count(5), 37837800);
    EXPECT_THROW(saxl::TauStream(6), saxl::Error);
    EXPECT_THROW(saxl::TauStream(3, 2), saxl::Error);
}

TEST(Tau, EveryMapValidAndDistinct) {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& tau : saxl::enumerate_tau(n)) {
            EXPECT_TRUE(saxl::is_valid_tau(n, tau));
            EXPECT_TRUE(seen.insert(tau.values).second);
        }
        EXPECT_TRUE(seen.count(saxl::beta_tau(n).values));
    }
    EXPECT_FALSE(saxl::is_valid_tau(2, {{1, 2, 2}}));
    EXPECT_FALSE(saxl::is_valid_tau(2, {{1, 1}}));
}

TEST(Contract, Examples) {
    const auto h = saxl::columnwise_hypergraph({1}, {1}, {1});
    saxl::VectorAssignment va{1, {{5}}, {{5}}, {{5}}};
    EXPECT_EQ(saxl::contract(h, va), 125);

    // repeated basis vector inside a layer-1 edge kills the product
    const auto g = saxl::staircase_hypergraph(2, {2, 1});
    auto zero = saxl::assignment_from_tau(2, {{1, 1, 2}});
    EXPECT_EQ(saxl::contract(g, zero), 0);

    va.n = 2;
    EXPECT_THROW(saxl::contract(h, va), saxl::Error);
    saxl::VectorAssignment short_va{1, {}, {}, {}};
    EXPECT_THROW(saxl::contract(h, short_va), saxl::Error);
}

TEST(Contract, TwoByOneHandComputation) {
    // Vertices 1 (beta 2), 2 (beta 1), 3 (beta 1).
    // layer 1 {1,2}: det[e2 e1] = -1, {3}: 1
    // layer 2 {1,3}: det[e2 e1] = -1, {2}: 1
    // layer 3 {1,2}: det[(1,2) (1,1)] = 1 - 2 = -1, {3}: 1
    const auto h = saxl::staircase_hypergraph(2, {2, 1});
    EXPECT_EQ(saxl::contract(h, saxl::assignment_from_tau(2, saxl::beta_tau(2))), -1);
    EXPECT_EQ(saxl::symmetrized_contraction_fast(2, {2, 1}), -2);
    EXPECT_EQ(saxl::symmetrized_contraction_bruteforce(2, {2, 1}), -2);
}

TEST(Contract, MultilinearInOneCVector) {
    const auto h = saxl::staircase_hypergraph(3, {4, 1, 1});
    const auto base = saxl::assignment_from_tau(3, saxl::beta_tau(3));
    const ExactScalar v = saxl::contract(h, base);
    ASSERT_NE(v, 0);
    for (int x = 0; x < h.d; ++x)
        for (int s : {-3, 0, 2, 7}) {
            auto scaled = base;
            for (auto& e : scaled.c[x])
                e *= s;
            EXPECT_EQ(saxl::contract(h, scaled), s * v);
        }
}

TEST(Contract, OnlyBetaSurvives) {
    for (int n = 1; n <= 3; ++n) {
        const auto beta = saxl::beta_tau(n);
        for (const auto& nu : dominating(n)) {
            const auto h = saxl::staircase_hypergraph(n, nu);
            for (const auto& tau : saxl::enumerate_tau(n)) {
                const ExactScalar v = saxl::contract(h, saxl::assignment_from_tau(n, tau));
                EXPECT_EQ(v != 0, tau == beta) << nu.to_string();
            }
        }
    }
}

TEST(SymmetrizedContraction, BruteForceAgreesWithFastUpToThree) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : dominating(n)) {
            const ExactScalar fast = saxl::symmetrized_contraction_fast(n, nu);
            EXPECT_NE(fast, 0);
            EXPECT_EQ(saxl::symmetrized_contraction_bruteforce(n, nu), fast) << nu.to_string();
        }
}

TEST(SymmetrizedContraction, WorkerCountDoesNotChangeTheSum) {
    const Partition nu{4, 1, 1};
    const ExactScalar one = saxl::symmetrized_contraction_bruteforce(3, nu, 4, 1);
    EXPECT_EQ(saxl::symmetrized_contraction_bruteforce(3, nu, 4, 3), one);
    EXPECT_EQ(saxl::symmetrized_contraction_bruteforce(3, nu, 4, 7), one);
}

TEST(SymmetrizedContraction, NonzeroForEveryDominatingUpToFive) {
    EXPECT_EQ(saxl::symmetrized_contraction_fast(1, {1}), 1);
    for (int n = 1; n <= 5; ++n)
        for (const auto& nu : dominating(n))
            EXPECT_NE(saxl::symmetrized_contraction_fast(n, nu), 0) << n << ' ' << nu.to_string();
}

TEST(SymmetrizedContraction, Errors) {
    try {
        saxl::symmetrized_contraction_fast(3, {2, 2, 2});
        FAIL();
    } catch (const saxl::Error& e) {
        EXPECT_EQ(e.code(), saxl::ErrorCode::NotDominating);
    }
    try {
        saxl::symmetrized_contraction_bruteforce(5, saxl::staircase(5));
        FAIL();
    } catch (const saxl::Error& e) {
        EXPECT_EQ(e.code(), saxl::ErrorCode::CapExceeded);
    }
    EXPECT_THROW(saxl::symmetrized_contraction_fast(2, {4}), saxl::Error);
}
