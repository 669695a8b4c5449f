#include <gtest/gtest.h>

#include "motifclust/cluster.hpp"
#include "test_util.hpp"

namespace motifclust {
namespace {

TEST(Cluster, BridgeRemovedByTwThreshold) {
  Graph g = testing::two_triangles_bridge();
  auto p = cluster(g, SimilarityKind::kTW, 0.0);
  EXPECT_EQ(p.labels, (std::vector<NodeId>{0, 0, 0, 3, 3, 3}));
  EXPECT_EQ(p.community_count, 2u);
  EXPECT_EQ(partition_members(p), (std::vector<std::vector<NodeId>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(Cluster, ThresholdIsInclusive) {
  Graph g = testing::triangle();
  EdgeScores s{SimilarityKind::kTW, {1.0, 0.5, 0.0}};
  EXPECT_EQ(kept_edge_mask(s, 0.5), (std::vector<std::uint8_t>{1, 1, 0}));
  EXPECT_EQ(sparsify(g, s, 0.5).edge_count(), 2u);
  EXPECT_EQ(sparsify(g, s, 1.0).edge_count(), 1u);
  EXPECT_EQ(sparsify(g, s, 1.5).edge_count(), 0u);
}

TEST(Cluster, SingletonsAndLargest) {
  Graph g = testing::make_graph(5, {{0, 1}, {1, 2}});
  auto p = connected_components(g);
  EXPECT_EQ(p.community_count, 3u);
  EXPECT_EQ(singleton_count(p), 2u);
  EXPECT_EQ(largest_community_size(p), 3u);
  EXPECT_EQ(partition_members(p, false), (std::vector<std::vector<NodeId>>{{0, 1, 2}}));
}

TEST(Cluster, ComponentsMatchBfsOnRandomGraphs) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    const NodeId n = 50 + 13 * seed;
    Graph g = testing::erdos_renyi(n, 1.2 / n, seed);
    auto expected = testing::bfs_labels(n, canonical_edges(g));
    auto p = connected_components(g);
    EXPECT_EQ(p.labels, expected) << "seed " << seed;
  }
}

TEST(Cluster, MaskedComponentsEqualSparsifiedComponents) {
  Graph g = testing::erdos_renyi(200, 0.03, 17);
  auto scores = compute_scores(g, SimilarityKind::kTW);
  for (double delta : {-6.0, -3.0, -1.0, 0.0}) {
    auto mask = kept_edge_mask(scores, delta);
    Graph sub = sparsify(g, scores, delta);
    EXPECT_EQ(sub, keep_edges(g, mask));
    EXPECT_EQ(connected_components(g, mask), connected_components(sub));
    EXPECT_EQ(cluster(g, scores, delta), connected_components(sub));
    for (EdgeId e = 0; e < scores.values.size(); ++e) {
      auto [u, v] = canonical_edges(g)[e];
      EXPECT_EQ(sub.has_edge(u, v), scores.values[e] >= delta);
    }
  }
}

TEST(Cluster, LabelsAreMinimumMembers) {
  Graph g = testing::make_graph(6, {{5, 1}, {1, 3}, {4, 2}});
  auto p = connected_components(g);
  EXPECT_EQ(p.labels, (std::vector<NodeId>{0, 1, 2, 1, 2, 1}));
}

}  // namespace
}  // namespace motifclust
