#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "saxl/partition.hpp"

using saxl::Partition;

TEST(Partition, NormalizesTrailingZeros) {
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({3, 1, 0}).length(), 2);
    EXPECT_EQ(Partition({5, 3, 1, 1}).size(), 10);
    EXPECT_TRUE(Partition{}.empty());
}

TEST(Partition, RejectsInvalidParts) {
    EXPECT_THROW(Partition({1, 2}), saxl::Error);
    EXPECT_THROW(Partition({2, -1}), saxl::Error);
    EXPECT_THROW(Partition({2, 0, 1}), saxl::Error);
    EXPECT_THROW(Partition({std::numeric_limits<int>::max(), 1}), saxl::Error);
}

TEST(Partition, TextForm) {
    EXPECT_EQ(Partition::parse("5,3,1,1"), Partition({5, 3, 1, 1}));
    EXPECT_EQ(Partition::parse(""), Partition{});
    EXPECT_EQ(Partition({5, 3, 1, 1}).to_string(), "5,3,1,1");
    EXPECT_EQ(Partition{}.to_string(), "");
    for (const char* bad : {"5, 3", "1,2", "a", "3,,1", ",", "3,", "0", "-1"})
        EXPECT_THROW(Partition::parse(bad), saxl::Error) << bad;
}

TEST(Partition, Transpose) {
    EXPECT_EQ(saxl::transpose({5, 3, 1, 1}), Partition({4, 2, 2, 1, 1}));
    EXPECT_EQ(saxl::transpose({3, 2, 1}), Partition({3, 2, 1}));
    EXPECT_EQ(saxl::transpose(Partition{}), Partition{});
    EXPECT_EQ(saxl::column_lengths({4, 3, 2, 1}), (std::vector<int>{4, 3, 2, 1}));
}

TEST(Partition, Dominates) {
    EXPECT_TRUE(saxl::dominates({5, 3, 1, 1}, {4, 3, 2, 1}));
    EXPECT_FALSE(saxl::dominates({3, 3}, {4, 2}));
    EXPECT_TRUE(saxl::dominates({3, 3}, {3, 3}));
    try {
        saxl::dominates({3}, {2});
        FAIL() << "expected SizeMismatch";
    } catch (const saxl::Error& e) {
        EXPECT_EQ(e.code(), saxl::ErrorCode::SizeMismatch);
    }
}

TEST(Partition, Comparable) {
    EXPECT_TRUE(saxl::comparable({2, 2, 2}, {3, 2, 1}));
    // 4 >= 3 but 5 < 6; and 3 < 4 the other way.
    EXPECT_FALSE(saxl::comparable({4, 1, 1}, {3, 3}));
    EXPECT_TRUE(saxl::comparable({6}, {1, 1, 1, 1, 1, 1}));
    EXPECT_THROW(saxl::comparable({2}, {1}), saxl::Error);
}

TEST(Partition, Staircase) {
    EXPECT_EQ(saxl::staircase(4), Partition({4, 3, 2, 1}));
    EXPECT_EQ(saxl::staircase(1), Partition({1}));
    EXPECT_EQ(saxl::staircase(2).size(), 3);
    EXPECT_THROW(saxl::staircase(0), saxl::Error);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(saxl::transpose(saxl::staircase(n)), saxl::staircase(n));
        EXPECT_EQ(saxl::staircase(n).size(), saxl::staircase_size(n));
    }
}

TEST(Partition, Add) {
    EXPECT_EQ(saxl::add({1, 1, 1, 1}, {3, 2, 1}), Partition({4, 3, 2, 1}));
    EXPECT_EQ(saxl::add({3}, {2, 1}), Partition({5, 1}));
    EXPECT_EQ(saxl::add({4, 2}, Partition{}), Partition({4, 2}));
    for (int n = 2; n <= 8; ++n)
        EXPECT_EQ(saxl::add(saxl::column_partition(n), saxl::staircase(n - 1)), saxl::staircase(n));
}

TEST(Partition, AsHook) {
    EXPECT_EQ(saxl::as_hook({5, 1, 1, 1}), (saxl::Hook{5, 3}));
    EXPECT_FALSE(saxl::as_hook({3, 2, 1}).has_value());
    EXPECT_EQ(saxl::as_hook({1}), (saxl::Hook{1, 0}));
    EXPECT_EQ(saxl::as_hook(Partition{}), (saxl::Hook{0, 0}));
    EXPECT_EQ(saxl::hook_partition({5, 3}), Partition({5, 1, 1, 1}));
}

TEST(Partition, Enumerate) {
    EXPECT_EQ(saxl::enumerate_partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(saxl::enumerate_partitions(6).size(), 11u);
    EXPECT_EQ(saxl::enumerate_partitions(0), std::vector<Partition>{Partition{}});
    EXPECT_THROW(saxl::enumerate_partitions(31), saxl::Error);
    EXPECT_NO_THROW(saxl::enumerate_partitions(31, 31));
}

TEST(Partition, EnumerateMatchesRecurrenceAndIsReverseLex) {
    for (int d = 0; d <= 20; ++d) {
        auto all = saxl::enumerate_partitions(d);
        ASSERT_EQ(static_cast<std::int64_t>(all.size()), saxl::oracle::partition_number(d)) << d;
        std::set<Partition> unique(all.begin(), all.end());
        EXPECT_EQ(unique.size(), all.size());
        for (std::size_t i = 1; i < all.size(); ++i)
            EXPECT_GT(all[i - 1], all[i]);
        for (const auto& p : all)
            EXPECT_EQ(p.size(), d);
    }
}

TEST(Partition, EnumerateHooks) {
    for (int d = 1; d <= 15; ++d) {
        auto hooks = saxl::enumerate_hooks(d);
        EXPECT_EQ(static_cast<int>(hooks.size()), d);
        int counted = 0;
        for (const auto& p : saxl::enumerate_partitions(d))
            counted += saxl::as_hook(p).has_value();
        EXPECT_EQ(counted, d);
    }
}

TEST(PartitionProperty, TransposeIsAnInvolutionAndAntiIsomorphism) {
    for (int d = 0; d <= 10; ++d) {
        auto all = saxl::enumerate_partitions(d);
        for (const auto& p : all) {
            EXPECT_EQ(saxl::transpose(saxl::transpose(p)), p);
            for (const auto& q : all)
                EXPECT_EQ(saxl::dominates(p, q), saxl::dominates(saxl::transpose(q), saxl::transpose(p)));
        }
    }
}

TEST(PartitionProperty, DominanceIsAPartialOrder) {
    for (int d = 0; d <= 8; ++d) {
        auto all = saxl::enumerate_partitions(d);
        for (const auto& p : all) {
            EXPECT_TRUE(saxl::dominates(p, p));
            for (const auto& q : all) {
                if (saxl::dominates(p, q) && saxl::dominates(q, p))
                    EXPECT_EQ(p, q);
                for (const auto& r : all)
                    if (saxl::dominates(p, q) && saxl::dominates(q, r))
                        EXPECT_TRUE(saxl::dominates(p, r));
            }
        }
    }
}
