#include <gtest/gtest.h>

#include <cmath>

#include "motifclust/sbm_theory.hpp"

namespace motifclust {
namespace {

TEST(SbmTheory, InsideTwAtDefaults) {
  auto e = sbm_expected_scores({.p1 = 0.1, .p2 = 0.8, .q = 0.05});
  EXPECT_NEAR(e.inside_b1.tw, -0.2625, 1e-12);
  EXPECT_NEAR(e.inside_b1.triangles, 0.0125, 1e-12);
  EXPECT_NEAR(e.inside_b1.degree_sum, 0.3, 1e-12);
  EXPECT_NEAR(e.inside_b1.tw, e.inside_b1.triangles - e.inside_b1.wedges, 1e-12);
  EXPECT_NEAR(e.across.tw, e.across.triangles - e.across.wedges, 1e-12);
  EXPECT_NEAR(e.across.triangles, 0.045, 1e-12);
  EXPECT_EQ(e.inside_b1.row, EdgeClass::kInsideB1);
  EXPECT_EQ(e.across.row, EdgeClass::kAcross);
}

TEST(SbmTheory, TectonicMarginAtDelta) {
  auto e = sbm_expected_scores({.p1 = 0.1, .p2 = 0.8, .q = 0.05}, 0.04);
  EXPECT_NEAR(e.inside_b1.tectonic, 0.0125 - 0.04 * 0.3, 1e-12);
  EXPECT_NEAR(e.across.tectonic, 0.045 - 0.04 * 1.0, 1e-12);
}

TEST(SbmTheory, GapMatchesExpectationDifference) {
  for (double q : {0.0, 0.01, 0.05, 0.2}) {
    SbmParams p{.n = 500, .p1 = 0.1, .p2 = 0.8, .q = q};
    auto e = sbm_expected_scores(p);
    EXPECT_NEAR(tw_expected_gap(p), p.n * (e.inside_b1.tw - e.across.tw), 1e-9);
  }
}

TEST(SbmTheory, GapPositiveInSparseRegime) {
  const double n = 1000, p1 = 2 * std::log(n) / n;
  double gap = tw_expected_gap({.n = 1000, .p1 = p1, .p2 = 0.8, .q = p1 / 2});
  EXPECT_GT(gap, 0.0);
  EXPECT_NEAR(gap, 770.0, 5.0);
}

TEST(SbmTheory, TectonicInfeasibleAtDefaults) {
  auto v = tectonic_infeasibility_check({.p1 = 0.1, .p2 = 0.8, .q = 0.05});
  EXPECT_FALSE(v.feasible);
  EXPECT_NEAR(v.lower, 0.045, 1e-12);
  EXPECT_NEAR(v.upper, 0.0125 / 0.3, 1e-12);
}

TEST(SbmTheory, TectonicFeasibleCases) {
  auto balanced = tectonic_infeasibility_check({.p1 = 0.5, .p2 = 0.5, .q = 0.01});
  EXPECT_TRUE(balanced.feasible);
  EXPECT_LT(balanced.lower, balanced.upper);
  auto disjoint = tectonic_infeasibility_check({.p1 = 0.1, .p2 = 0.8, .q = 0.0});
  EXPECT_TRUE(disjoint.feasible);
  EXPECT_EQ(disjoint.lower, 0.0);
}

}  // namespace
}  // namespace motifclust
