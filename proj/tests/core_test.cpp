#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "oppm/core.hpp"
#include "test_util.hpp"

namespace oppm {
namespace {

using testing::I64Seq;

const I64Seq kZigzag{6, 5, 8, 4, 7};
const I64Seq kZigzagText{8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26};

TEST(RankTable, TiesBrokenByPosition) {
  const RankTable rt = rank_table(I64Seq{6, 3, 8, 3, 10, 7, 10});
  EXPECT_EQ(rt.order, (std::vector<std::uint32_t>{1, 3, 0, 5, 2, 4, 6}));
  EXPECT_EQ(rt.equal, (std::vector<std::uint8_t>{1, 0, 0, 0, 0, 1}));
}

TEST(RankTable, DistinctValues) {
  const RankTable rt = rank_table(kZigzag);
  EXPECT_EQ(rt.order, (std::vector<std::uint32_t>{3, 1, 0, 4, 2}));
  EXPECT_EQ(rt.equal, (std::vector<std::uint8_t>{0, 0, 0, 0}));
}

TEST(RankTable, SortedAndPairs) {
  EXPECT_EQ(rank_table(I64Seq{1, 2, 3}).order, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(rank_table(I64Seq{1, 2, 3}).equal, (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(rank_table(I64Seq{7, 7}).order, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(rank_table(I64Seq{7, 7}).equal, (std::vector<std::uint8_t>{1}));
}

TEST(RankTable, EmptyPatternRejected) {
  try {
    (void)rank_table(I64Seq{});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty pattern");
  }
}

TEST(RankTable, PermutationMatchesIndependentSort) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = testing::random_seq(rng, 1 + trial % 40, trial % 2 ? 4 : 1'000'000);
    const RankTable rt = rank_table(x);
    // Independent route: lexicographic sort of (value, index) pairs.
    std::vector<std::pair<std::int64_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < x.size(); ++i) pairs.emplace_back(x[i], i);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t k = 0; k < x.size(); ++k) ASSERT_EQ(rt.order[k], pairs[k].second);
    for (std::size_t k = 0; k + 1 < x.size(); ++k)
      ASSERT_EQ(rt.equal[k], pairs[k].first == pairs[k + 1].first ? 1 : 0);
  }
}

TEST(RankTable, InvariantUnderMonotoneMaps) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testing::random_seq(rng, 1 + trial % 20, trial % 2 ? 3 : 200);
    EXPECT_EQ(rank_table(x), rank_table(testing::random_monotone_image(rng, x)));
  }
}

TEST(Isomorphism, ExampleWithTies) {
  const I64Seq y{2, 1, 4, 1, 5, 3, 5};
  EXPECT_TRUE(is_isomorphic_at(rank_table(I64Seq{6, 3, 8, 3, 10, 7, 10}), y, 0));
}

TEST(Isomorphism, ZigzagText) {
  const RankTable rt = rank_table(kZigzag);
  EXPECT_TRUE(is_isomorphic_at(rt, kZigzagText, 3));
  // Frozen from the pairwise oracle.
  EXPECT_FALSE(brute_force_isomorphic(kZigzag.view(), kZigzagText.view().subspan(0, 5)));
  EXPECT_FALSE(is_isomorphic_at(rt, kZigzagText, 0));
  // 20 appears twice in y[10..14]; the pattern has no tie.
  EXPECT_FALSE(is_isomorphic_at(rt, kZigzagText, 10));
}

TEST(Isomorphism, Reflexive) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_seq(rng, 1 + trial % 15, 5);
    EXPECT_TRUE(is_isomorphic_at(rank_table(x), x, 0));
  }
}

TEST(Isomorphism, WindowOutOfRange) {
  const RankTable rt = rank_table(kZigzag);
  try {
    (void)is_isomorphic_at(rt, kZigzagText, 13);
    FAIL();
  } catch (const std::out_of_range& e) {
    EXPECT_STREQ(e.what(), "window exceeds text");
  }
  EXPECT_NO_THROW((void)is_isomorphic_at(rt, kZigzagText, 12));
  EXPECT_THROW((void)is_isomorphic_at(rt, kZigzagText, 100), std::out_of_range);
}

TEST(Isomorphism, SingleElementAlwaysMatches) {
  const RankTable rt = rank_table(I64Seq{42});
  for (std::size_t i = 0; i < kZigzagText.size(); ++i) EXPECT_TRUE(is_isomorphic_at(rt, kZigzagText, i));
}

TEST(Isomorphism, AgreesWithPairwiseOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t m = 1 + trial % 12;
    const std::int64_t alphabet = trial % 3 == 0 ? 1'000'000 : (trial % 3 == 1 ? 3 : 2);
    const auto x = testing::random_seq(rng, m, alphabet);
    const auto y = testing::random_seq(rng, m + 8, alphabet);
    const RankTable rt = rank_table(x);
    for (std::size_t i = 0; i + m <= y.size(); ++i)
      ASSERT_EQ(is_isomorphic_at(rt, y, i), brute_force_isomorphic(x.view(), y.view().subspan(i, m)));
  }
}

TEST(BruteForce, Examples) {
  EXPECT_TRUE(brute_force_isomorphic(I64Seq{6, 3, 8, 3, 10, 7, 10}, I64Seq{2, 1, 4, 1, 5, 3, 5}));
  EXPECT_FALSE(brute_force_isomorphic(I64Seq{1, 2}, I64Seq{2, 1}));
  EXPECT_FALSE(brute_force_isomorphic(I64Seq{1, 1}, I64Seq{1, 2}));
  EXPECT_FALSE(brute_force_isomorphic(I64Seq{1, 2}, I64Seq{1, 2, 3}));
}

TEST(Sequence, RejectsNaN) {
  EXPECT_THROW(Sequence<double>({1.0, std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
  EXPECT_NO_THROW(Sequence<double>({1.0, std::numeric_limits<double>::infinity()}));
}

TEST(Sequence, DoubleEqualityIsExact) {
  const Sequence<double> x{0.1 + 0.2, 0.3};
  const RankTable rt = rank_table(x);
  EXPECT_EQ(rt.equal, (std::vector<std::uint8_t>{0}));
  EXPECT_FALSE(is_isomorphic_at(rt, Sequence<double>{0.3, 0.3}, 0));
}

TEST(Sequence, InclusiveSlice) {
  EXPECT_EQ(kZigzagText.slice(3, 7), (I64Seq{16, 15, 20, 13, 17}));
  EXPECT_THROW((void)kZigzagText.slice(3, 17), std::out_of_range);
}

}  // namespace
}  // namespace oppm
