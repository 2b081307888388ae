#include <gtest/gtest.h>

#include <random>

#include "tss/bounds.hpp"
#include "tss/generators.hpp"
#include "oracles.hpp"

using namespace tss;

namespace {

ThresholdAssignment star_thresholds(std::size_t n, Threshold center) {
  std::vector<Threshold> t(n, 1);
  t[0] = center;
  return ThresholdAssignment(t);
}

Rational frac(long long a, long long b) {
  Rational q(a);
  q /= b;
  return q;
}

}  // namespace

TEST(Bounds, StarOfNine) {
  auto g = star_graph(9);
  auto t = star_thresholds(9, 5);
  EXPECT_EQ(bound_old(g, t).exact, frac(41, 9));
  EXPECT_EQ(bound_new(g, t).exact, Rational(1));
  EXPECT_NEAR(bound_old(g, t).decimal, 41.0 / 9.0, 1e-12);
}

TEST(Bounds, PathWithHeavyMiddle) {
  auto g = path_graph(3);
  ThresholdAssignment t({1, 2, 1});
  EXPECT_EQ(bound_new(g, t).exact, Rational(1));
  EXPECT_EQ(bound_old(g, t).exact, frac(5, 3));
}

TEST(Bounds, TriangleUnitThresholds) {
  auto g = clique_graph(3);
  ThresholdAssignment t({1, 1, 1});
  EXPECT_EQ(bound_new(g, t).exact, Rational(1));
  EXPECT_EQ(bound_old(g, t).exact, Rational(1));
}

TEST(Bounds, ZeroThresholdContributesNothing) {
  auto g = Graph::from_edges(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
  ThresholdAssignment t({1, 1, 1, 0});
  EXPECT_TRUE(counts_in_refined_bound(g, t, 3));
  EXPECT_FALSE(counts_in_refined_bound(g, t, 0));
  EXPECT_EQ(bound_new(g, t).exact, frac(1, 1));
  EXPECT_EQ(bound_old(g, t).exact, frac(1, 2) + frac(1, 3) + frac(1, 2));
}

TEST(Bounds, ThresholdAboveDegreeCapsAtOne) {
  auto g = path_graph(2);
  ThresholdAssignment t({7, 1});
  EXPECT_EQ(bound_old(g, t).exact, Rational(1) + frac(1, 2));
}

TEST(Bounds, ApplicabilityNeedsComponentsOfThree) {
  auto pair_plus_triangle = Graph::from_edges(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  ThresholdAssignment t({1, 1, 1, 1, 1});
  EXPECT_FALSE(check_bound_dominance(pair_plus_triangle, t).applicable);
  EXPECT_TRUE(check_bound_dominance(clique_graph(3), ThresholdAssignment({1, 1, 1})).applicable);
}

TEST(Bounds, ReportOnStar) {
  auto r = check_bound_dominance(star_graph(9), star_thresholds(9, 5));
  EXPECT_EQ(r.tss_size, 1u);
  EXPECT_EQ(r.v2_size, 1u);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.dominance_holds);
  EXPECT_TRUE(r.solver_within_bound);
  EXPECT_EQ(to_string(r.bound_old.exact), "41/9");
}

TEST(BoundProperties, MatchesLiteralSums) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    auto g = gnp(n, std::uniform_real_distribution<double>(0.02, 0.4)(rng), rng());
    std::vector<Threshold> t(n);
    for (Vertex v = 0; v < n; ++v) {
      t[v] = std::uniform_int_distribution<Threshold>(0, static_cast<Threshold>(g.degree(v)) + 2)(rng);
    }
    ThresholdAssignment ta(t);
    ASSERT_EQ(bound_old(g, ta).exact, oracle::old_bound(g, ta)) << "instance " << i;
    ASSERT_EQ(bound_new(g, ta).exact, oracle::new_bound(g, ta)) << "instance " << i;
  }
}

TEST(BoundProperties, DominanceAndSolverWithinBound) {
  std::mt19937_64 rng(66);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 50)(rng);
    auto g = gnp(n, std::uniform_real_distribution<double>(0.1, 0.5)(rng), rng());
    if (!is_connected(g)) continue;
    auto t = assign_thresholds(g, policy::RandomInDegree{}, rng());
    auto r = check_bound_dominance(g, t);
    ASSERT_TRUE(r.applicable);
    EXPECT_LE(r.bound_new.exact, oracle::old_bound(g, t));
    EXPECT_LE(Rational(static_cast<long long>(r.tss_size)), oracle::new_bound(g, t));
    EXPECT_TRUE(r.dominance_holds && r.solver_within_bound);
    ++checked;
  }
}
