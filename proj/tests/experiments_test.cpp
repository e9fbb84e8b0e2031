#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "kings/constructions.hpp"
#include "kings/experiments.hpp"
#include "kings/rng.hpp"
#include "oracle.hpp"

namespace kings {
namespace {

TEST(GapEscape, DistancesHalvePerLevel) {
  const auto trace = gap_escape_experiment(6);
  ASSERT_EQ(trace.levels.size(), 6u);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto& l = trace.levels[k - 1];
    EXPECT_EQ(l.level, k);
    EXPECT_EQ(l.sample_size, std::size_t{1} << k);
    ASSERT_EQ(l.kings.size(), 1u);
    EXPECT_EQ(l.kings[0], l.sample_size - 1);
    EXPECT_EQ(l.king_metric[0], std::ldexp(1.0, -static_cast<int>(k)));
  }
  EXPECT_EQ(trace.levels[1].king_coordinates[0].x, 0.75);
  EXPECT_EQ(trace.levels[1].king_metric[0], 0.25);
  EXPECT_EQ(trace.levels[3].king_metric[0], 0.0625);
}

TEST(GapEscape, KingMatchesOracleAtEachLevel) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto grid = uniform_grid(std::size_t{1} << k, false);
    const auto kings = oracle::kings(order_selection(grid, OrderMode::min));
    ASSERT_EQ(kings.size(), 1u);
    EXPECT_EQ(1.0 - grid[*kings.begin()], std::ldexp(1.0, -static_cast<int>(k)));
  }
}

TEST(GapEscape, CompactControlStaysAtEndpoint) {
  const auto trace = gap_escape_experiment(8, true);
  for (const auto& l : trace.levels) {
    ASSERT_EQ(l.kings.size(), 1u);
    EXPECT_EQ(l.king_coordinates[0].x, 1.0);
    EXPECT_EQ(l.king_metric[0], 0.0);
  }
}

TEST(GapEscape, SampleSizesStrictlyIncrease) {
  const auto trace = gap_escape_experiment(5);
  for (std::size_t i = 1; i < trace.levels.size(); ++i) {
    EXPECT_LT(trace.levels[i - 1].sample_size, trace.levels[i].sample_size);
  }
  EXPECT_THROW(gap_escape_experiment(0), InputError);
}

TEST(GradedEscape, KingsSitInTopBlock) {
  const auto two = graded_escape_experiment({1}, 2, 0);
  ASSERT_EQ(two.levels.size(), 2u);
  for (double m : two.levels[1].king_metric) EXPECT_EQ(m, 1.0);

  const auto trace = graded_escape_experiment({3}, 5, 1234);
  const auto& top = trace.levels.back();
  EXPECT_EQ(top.sample_size, 15u);
  ASSERT_FALSE(top.kings.empty());
  for (double m : top.king_metric) EXPECT_EQ(m, 4.0);
  for (std::size_t lvl = 0; lvl < trace.levels.size(); ++lvl) {
    ASSERT_FALSE(trace.levels[lvl].kings.empty());
    for (double m : trace.levels[lvl].king_metric) EXPECT_EQ(m, static_cast<double>(lvl));
  }
}

TEST(GradedEscape, SingleLevelKingsAreInnerKings) {
  const std::uint64_t seed = 77;
  const auto trace = graded_escape_experiment({5}, 1, seed);
  const auto inner = random_tournament(5, derive_seed(seed, 1, 0));
  const auto expected = oracle::kings(inner);
  const std::set<std::size_t> got(trace.levels[0].kings.begin(), trace.levels[0].kings.end());
  EXPECT_EQ(got, expected);
}

TEST(GradedEscape, DeterministicInSeed) {
  const auto a = graded_escape_experiment({2, 3}, 4, 9);
  const auto b = graded_escape_experiment({2, 3}, 4, 9);
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) EXPECT_EQ(a.levels[i].kings, b.levels[i].kings);
  EXPECT_THROW(graded_escape_experiment({}, 2, 0), InputError);
  EXPECT_THROW(graded_escape_experiment({0}, 2, 0), InputError);
  EXPECT_THROW(graded_escape_experiment({1}, 0, 0), InputError);
}

TEST(SineKing, EndpointKingsAndPassingFalsifier) {
  for (std::size_t n : {2u, 16u, 100u}) {
    const auto r = sine_king_experiment(n);
    EXPECT_TRUE(r.min_king_is_right_end()) << n;
    EXPECT_TRUE(r.max_king_is_left_end()) << n;
    EXPECT_EQ(r.min_certificate.verdict, Verdict::pass) << n;
    EXPECT_EQ(r.max_certificate.verdict, Verdict::pass) << n;
  }
  const auto two = sine_king_experiment(2);
  EXPECT_EQ(two.min_kings, (std::vector<std::size_t>{1}));
  EXPECT_EQ(two.max_kings, (std::vector<std::size_t>{0}));
  EXPECT_THROW(sine_king_experiment(1), InputError);
}

TEST(SineKing, FalsifierVerdictMatchesOracle) {
  const auto r = sine_king_experiment(16);
  const auto space = sample_graph(sine_curve_f, r.s_values);
  const double delta = r.min_gap / 2;
  EXPECT_FALSE(oracle::has_side_flip(space, graph_selection(r.s_values, OrderMode::min).selection, delta, 4 * delta));
  EXPECT_FALSE(oracle::has_side_flip(space, graph_selection(r.s_values, OrderMode::max).selection, delta, 4 * delta));
}

TEST(ExhaustiveVerify, Counts) {
  const auto three = exhaustive_verify(3);
  EXPECT_EQ(three.tournaments, 11u);
  EXPECT_EQ(three.failures, 0u);
  const auto five = exhaustive_verify(5);
  EXPECT_EQ(five.tournaments, 1099u);
  EXPECT_EQ(five.per_size.back().tournaments, 1024u);
  EXPECT_EQ(five.failures, 0u);
  const auto six = exhaustive_verify(6);
  EXPECT_EQ(six.tournaments, 33867u);  // sum of 2^(n(n-1)/2), n = 1..6
  EXPECT_EQ(six.failures, 0u);
  EXPECT_THROW(exhaustive_verify(0), InputError);
  EXPECT_THROW(exhaustive_verify(7), InputError);
}

}  // namespace
}  // namespace kings
