#include <gtest/gtest.h>

#include "motifclust/error.hpp"
#include "motifclust/generators.hpp"
#include "motifclust/parallel.hpp"
#include "test_util.hpp"

namespace motifclust {
namespace {

TEST(Sbm, SameSeedSameGraph) {
  SbmParams p{.n = 100, .p1 = 0.1, .p2 = 0.3, .q = 0.02, .seed = 9};
  EXPECT_EQ(gen_sbm(p), gen_sbm(p));
  SbmParams other = p;
  other.seed = 10;
  EXPECT_NE(gen_sbm(p), gen_sbm(other));
}

TEST(Sbm, EdgeDensitiesPerBlockPair) {
  SbmParams p{.n = 400, .p1 = 0.1, .p2 = 0.3, .q = 0.02, .seed = 3};
  Graph g = gen_sbm(p);
  ASSERT_EQ(g.node_count(), 800u);
  double in1 = 0, in2 = 0, across = 0;
  for (const Edge& e : canonical_edges(g)) {
    const int a = sbm_block(p, e.u), b = sbm_block(p, e.v);
    (a != b ? across : a == 1 ? in1 : in2) += 1;
  }
  const double pairs_in = 400.0 * 399 / 2, pairs_across = 400.0 * 400;
  // five binomial standard deviations
  EXPECT_NEAR(in1 / pairs_in, 0.1, 5 * std::sqrt(0.1 * 0.9 / pairs_in));
  EXPECT_NEAR(in2 / pairs_in, 0.3, 5 * std::sqrt(0.3 * 0.7 / pairs_in));
  EXPECT_NEAR(across / pairs_across, 0.02, 5 * std::sqrt(0.02 * 0.98 / pairs_across));
}

TEST(Sbm, GeometricSamplingDensity) {
  SbmParams p{.n = 6000, .p1 = 0.002, .p2 = 0.004, .q = 0.0005, .seed = 5};
  Graph g = gen_sbm(p);
  double in1 = 0, across = 0;
  for (const Edge& e : canonical_edges(g)) {
    if (sbm_block(p, e.u) != sbm_block(p, e.v)) across += 1;
    else if (sbm_block(p, e.u) == 1) in1 += 1;
  }
  const double pairs_in = 6000.0 * 5999 / 2, pairs_across = 6000.0 * 6000;
  EXPECT_NEAR(in1 / pairs_in, 0.002, 5 * std::sqrt(0.002 / pairs_in));
  EXPECT_NEAR(across / pairs_across, 0.0005, 5 * std::sqrt(0.0005 / pairs_across));
}

TEST(Sbm, ExtremeProbabilities) {
  Graph full = gen_sbm({.n = 10, .p1 = 1.0, .p2 = 1.0, .q = 1.0, .seed = 1});
  EXPECT_EQ(full.edge_count(), 190u);
  Graph none = gen_sbm({.n = 10, .p1 = 0.0, .p2 = 0.0, .q = 0.0, .seed = 1});
  EXPECT_EQ(none.edge_count(), 0u);
}

TEST(Sbm, Validation) {
  EXPECT_THROW(gen_sbm({.n = 10, .p1 = 1.5}), UsageError);
  EXPECT_THROW(gen_sbm({.n = 10, .q = -0.1}), UsageError);
  EXPECT_TRUE(sbm_warnings({.n = 10, .p1 = 0.1, .p2 = 0.8, .q = 0.05}).empty());
  EXPECT_FALSE(sbm_warnings({.n = 10, .p1 = 0.1, .p2 = 0.8, .q = 0.2}).empty());
}

TEST(Rmat, EdgeCountNearRequest) {
  RmatParams p;
  p.scale = 14;
  p.seed = 4;
  EXPECT_EQ(p.requested_edges(), 5u << 14);
  Graph g = gen_rmat(p);
  EXPECT_EQ(g.node_count(), 1u << 14);
  EXPECT_GT(g.edge_count(), 0.85 * p.requested_edges());
  EXPECT_LE(g.edge_count(), p.requested_edges());
}

TEST(Rmat, SkewTowardFirstQuadrant) {
  RmatParams p;
  p.scale = 12;
  p.seed = 8;
  Graph g = gen_rmat(p);
  std::uint64_t low = 0;
  for (NodeId u = 0; u < g.node_count() / 2; ++u) low += g.degree(u);
  EXPECT_GT(low, g.edge_count());  // more than half of the degree mass
}

TEST(Rmat, IndependentOfWorkerCount) {
  RmatParams p;
  p.scale = 15;
  p.edges = 200000;
  p.seed = 12;
  Graph reference = gen_rmat(p);
  for (std::size_t threads : {1, 2, 4}) {
    WorkerPool pool(threads);
    EXPECT_EQ(pool.run([&] { return gen_rmat(p); }), reference);
  }
}

TEST(Rmat, Validation) {
  RmatParams p;
  p.a = {0.5, 0.2, 0.2, 0.2};
  EXPECT_THROW(gen_rmat(p), UsageError);
  p.a = {0.25, 0.25, 0.25, 0.25};
  p.scale = 0;
  EXPECT_THROW(gen_rmat(p), UsageError);
}

}  // namespace
}  // namespace motifclust
