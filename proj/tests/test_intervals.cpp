#include <random>

#include <gtest/gtest.h>

#include "achset/intervals.hpp"
#include "oracles.hpp"

namespace achset {
namespace {

Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

IntervalUnion gn_iterate_two() {
  return normalize({{R(0), R(5, 12)}, {R(1, 2), R(11, 12)}, {R(3, 4), R(7, 6)}, {R(5, 4), R(5, 3)}});
}

TEST(Normalize, MergesOverlapsAndTouching) {
  EXPECT_EQ(normalize({{R(0), R(1)}, {R(1, 2), R(2)}}).components(), std::vector<Interval>({{R(0), R(2)}}));
  EXPECT_EQ(normalize({{R(0), R(1)}, {R(1), R(2)}}).components(), std::vector<Interval>({{R(0), R(2)}}));
  EXPECT_EQ(gn_iterate_two().components(),
            std::vector<Interval>({{R(0), R(5, 12)}, {R(1, 2), R(7, 6)}, {R(5, 4), R(5, 3)}}));
  EXPECT_TRUE(normalize({}).empty());
}

TEST(Normalize, KeepsNestedAndDegenerate) {
  const auto u = normalize({{R(0), R(4)}, {R(1), R(2)}, {R(5), R(5)}});
  EXPECT_EQ(u.components(), std::vector<Interval>({{R(0), R(4)}, {R(5), R(5)}}));
  EXPECT_TRUE(u.contains(R(5)));
  EXPECT_FALSE(u.contains(R(9, 2)));
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure(IntervalUnion{}), R(0));
  EXPECT_EQ(measure(normalize({{R(0), R(2)}})), R(2));
  EXPECT_EQ(measure(gn_iterate_two()), R(3, 2));
}

TEST(Gaps, Examples) {
  EXPECT_TRUE(gaps(normalize({{R(0), R(1)}}), {R(0), R(1)}).empty());
  EXPECT_EQ(gaps(normalize({{R(0), R(1)}, {R(2), R(3)}}), {R(0), R(3)}), std::vector<Gap>({{R(1), R(2)}}));
  EXPECT_EQ(gaps(gn_iterate_two(), {R(0), R(5, 3)}),
            std::vector<Gap>({{R(5, 12), R(1, 2)}, {R(7, 6), R(5, 4)}}));
}

TEST(Gaps, RejectsUnionOutsideAmbient) {
  EXPECT_THROW(gaps(normalize({{R(0), R(4)}}), {R(0), R(3)}), std::invalid_argument);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm(normalize({{R(0), R(2)}})), R(2));
  EXPECT_EQ(norm(gn_iterate_two()), R(2, 3));
  EXPECT_EQ(norm(normalize({{R(0), R(0)}})), R(0));
  EXPECT_THROW(norm(IntervalUnion{}), std::invalid_argument);
}

TEST(TranslateUnion, Examples) {
  const std::vector<Rational> single{R(0)};
  EXPECT_EQ(translate_union(single, R(1)).components(), std::vector<Interval>({{R(0), R(1)}}));

  const std::vector<Rational> group{R(0), R(2), R(3), R(4), R(5), R(6), R(7), R(9)};
  EXPECT_EQ(translate_union(group, R(3, 2)).components(),
            std::vector<Interval>({{R(0), R(3, 2)}, {R(2), R(17, 2)}, {R(9), R(21, 2)}}));

  const std::vector<Rational> f2{R(0), R(1, 2), R(3, 4), R(5, 4)};
  EXPECT_EQ(translate_union(f2, R(5, 12)), gn_iterate_two());
}

TEST(TranslateUnion, RejectsUnsortedOffsets) {
  const std::vector<Rational> bad{R(1), R(0)};
  EXPECT_THROW(translate_union(bad, R(1)), std::invalid_argument);
  const std::vector<Rational> ok{R(0)};
  EXPECT_THROW(translate_union(ok, R(-1)), std::invalid_argument);
}

TEST(Intersect, ClipsToWindow) {
  const auto u = gn_iterate_two();
  EXPECT_EQ(intersect(u, {R(1, 3), R(1)}).components(),
            std::vector<Interval>({{R(1, 3), R(5, 12)}, {R(1, 2), R(1)}}));
}

TEST(Contains, SubsetOfUnion) {
  const auto u = gn_iterate_two();
  EXPECT_TRUE(u.contains(normalize({{R(0), R(1, 3)}, {R(3, 2), R(5, 3)}})));
  EXPECT_FALSE(u.contains(normalize({{R(0), R(1, 2)}})));
}

TEST(IntervalProperty, NormalizeAgreesWithOracles) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = testing::random_intervals(rng, 1 + trial % 8);
    const auto u = normalize(raw);
    ASSERT_EQ(normalize(u.components()), u);
    ASSERT_EQ(measure(u), testing::inclusion_exclusion_measure(raw));
    for (long i = 0; i <= 8 * 14; ++i) {
      const Rational x = R(i, 8);
      ASSERT_EQ(u.contains(x), testing::raw_contains(raw, x)) << x.str();
    }
    const Interval ambient(u.min(), u.max());
    Rational tiled = measure(u);
    for (const auto& g : gaps(u, ambient)) tiled += g.length();
    ASSERT_EQ(tiled, ambient.length());
  }
}

TEST(IntervalProperty, NormNonIncreasingAlongDescendingChain) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    IntervalUnion u = normalize(testing::random_intervals(rng, 6));
    Rational previous = norm(u);
    for (int step = 0; step < 6; ++step) {
      std::vector<Interval> shrunk;
      for (const auto& c : u.components()) {
        const Rational cut = c.length() * R(pick(rng), 8);
        shrunk.emplace_back(c.left() + cut, c.right());
        if (pick(rng) == 0) shrunk.emplace_back(c.left(), c.left());
      }
      const IntervalUnion next = normalize(shrunk);
      ASSERT_TRUE(u.contains(next));
      const Rational current = norm(next);
      ASSERT_LE(current, previous);
      previous = current;
      u = next;
    }
  }
}

}  // namespace
}  // namespace achset
