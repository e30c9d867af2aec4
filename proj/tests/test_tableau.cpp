#include <gtest/gtest.h>

#include "saxl/tableau.hpp"

using saxl::Filling;
using saxl::FillingPredicate;
using saxl::Partition;
using Rows = std::vector<std::vector<int>>;

namespace {

const Filling reference_filling(Rows{{1, 1, 1, 1, 2}, {2, 2, 3}, {3}, {4}});

} // namespace

TEST(Filling, ShapeFromRows) {
    EXPECT_EQ(reference_filling.shape(), Partition({5, 3, 1, 1}));
    EXPECT_EQ(reference_filling.column(0), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(reference_filling.column(4), (std::vector<int>{2}));
    EXPECT_THROW(Filling(Rows{{1}, {1, 2}}), saxl::Error);
    EXPECT_THROW(Filling(Rows{{1, 0}}), saxl::Error);
    EXPECT_THROW(Filling(std::vector<std::vector<int>>{{1}, {}}), saxl::Error);
}

TEST(Filling, Content) {
    EXPECT_EQ(saxl::content(reference_filling), (std::vector<int>{4, 3, 2, 1}));
    EXPECT_EQ(saxl::content(Filling(Rows{{1}})), (std::vector<int>{1}));
    EXPECT_EQ(saxl::content(Filling(Rows{{2, 2}})), (std::vector<int>{0, 2}));
}

TEST(Filling, Semistandard) {
    EXPECT_TRUE(saxl::is_semistandard(reference_filling));
    EXPECT_FALSE(saxl::is_semistandard(Filling(Rows{{1, 1}, {1}})));
    EXPECT_FALSE(saxl::is_semistandard(Filling(Rows{{2, 1}})));
}

TEST(Filling, DistinctColumns) {
    EXPECT_TRUE(saxl::has_distinct_column_entries(reference_filling));
    EXPECT_FALSE(saxl::has_distinct_column_entries(Filling(Rows{{1, 2}, {1}})));
    EXPECT_TRUE(saxl::has_distinct_column_entries(Filling(Rows{{3, 1, 2, 1}})));
    // distinct but not semistandard
    EXPECT_TRUE(saxl::has_distinct_column_entries(Filling(Rows{{2, 1}, {1}})));
}

TEST(GaleRyser, FiveThreeOneOne) {
    auto f = saxl::gale_ryser_filling({5, 3, 1, 1}, {4, 3, 2, 1});
    ASSERT_TRUE(f);
    EXPECT_TRUE(saxl::is_semistandard(*f));
    EXPECT_TRUE(saxl::has_content(*f, {4, 3, 2, 1}));
    EXPECT_EQ(f->shape(), Partition({5, 3, 1, 1}));
    // Greedy column placement: most unfilled boxes first, leftmost on ties.
    EXPECT_EQ(*f, Filling(Rows{{1, 1, 1, 1, 3}, {2, 2, 2}, {3}, {4}}));
}

TEST(GaleRyser, SmallCases) {
    EXPECT_EQ(saxl::gale_ryser_filling({3}, {1, 1, 1}), Filling(Rows{{1, 2, 3}}));
    EXPECT_FALSE(saxl::gale_ryser_filling({2, 2}, {3, 1}));
    EXPECT_EQ(saxl::gale_ryser_filling(Partition{}, Partition{}), Filling{});
    EXPECT_THROW(saxl::gale_ryser_filling({2}, {1}), saxl::Error);
}

TEST(GaleRyser, RowReadingCounterexampleStillWorks) {
    // Writing the content word row by row fails here (column 1,3,3).
    auto f = saxl::gale_ryser_filling({4, 1, 1}, {2, 2, 2});
    ASSERT_TRUE(f);
    EXPECT_TRUE(saxl::is_semistandard(*f));
}

TEST(BruteForceFilling, Examples) {
    EXPECT_EQ(saxl::brute_force_filling_search({2, 1}, {2, 1}, FillingPredicate::semistandard),
              Filling(Rows{{1, 1}, {2}}));
    EXPECT_FALSE(saxl::brute_force_filling_search({2, 2}, {3, 1}, FillingPredicate::distinct_columns));
    EXPECT_FALSE(saxl::brute_force_filling_search({1, 1}, {2}, FillingPredicate::distinct_columns));
    EXPECT_FALSE(saxl::brute_force_filling_search({1, 1}, {2}, FillingPredicate::semistandard));
    EXPECT_THROW(saxl::brute_force_filling_search({13}, {13}, FillingPredicate::semistandard), saxl::Error);
    EXPECT_THROW(saxl::brute_force_filling_search({2}, {1}, FillingPredicate::semistandard), saxl::Error);
}

TEST(BruteForceFilling, DistinctColumnsFoundWhereSemistandardExists) {
    auto f = saxl::brute_force_filling_search({3, 2, 1}, {3, 2, 1}, FillingPredicate::distinct_columns);
    ASSERT_TRUE(f);
    EXPECT_TRUE(saxl::has_distinct_column_entries(*f));
    EXPECT_TRUE(saxl::has_content(*f, {3, 2, 1}));
}

TEST(GaleRyserProperty, SoundAndCompleteUpToSevenBoxes) {
    // The full ten-box sweep lives in the acceptance suite.
    for (int d = 0; d <= 7; ++d) {
        auto all = saxl::enumerate_partitions(d);
        for (const auto& shape : all)
            for (const auto& gamma : all) {
                auto f = saxl::gale_ryser_filling(shape, gamma);
                ASSERT_EQ(f.has_value(), saxl::dominates(shape, gamma)) << shape.to_string() << " / " << gamma.to_string();
                if (f) {
                    EXPECT_TRUE(saxl::is_semistandard(*f));
                    EXPECT_TRUE(saxl::has_distinct_column_entries(*f));
                    EXPECT_TRUE(saxl::has_content(*f, gamma));
                }
            }
    }
}
