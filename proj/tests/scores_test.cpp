#include <gtest/gtest.h>

#include <sstream>

#include "motifclust/error.hpp"
#include "motifclust/io.hpp"
#include "motifclust/scores.hpp"
#include "test_util.hpp"

namespace motifclust {
namespace {

TEST(Scores, TwOnTwoTrianglesWithBridge) {
  Graph g = testing::two_triangles_bridge();
  auto s = compute_scores(g, SimilarityKind::kTW);
  EXPECT_EQ(s.values[*g.edge_id(0, 1)], 1.0);
  EXPECT_EQ(s.values[*g.edge_id(0, 2)], 0.0);
  EXPECT_EQ(s.values[*g.edge_id(1, 2)], 0.0);
  EXPECT_EQ(s.values[*g.edge_id(2, 3)], -4.0);
}

TEST(Scores, TwOnPathAndTriangle) {
  auto path = compute_scores(testing::path3(), SimilarityKind::kTW);
  EXPECT_EQ(path.values, (std::vector<double>{-1.0, -1.0}));
  auto tri = compute_scores(testing::triangle(), SimilarityKind::kTW);
  EXPECT_EQ(tri.values, (std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(Scores, FormulasAgainstOracleCounts) {
  Graph g = testing::erdos_renyi(30, 0.25, 9);
  const auto brute = testing::brute_force_counts(g, true);
  const auto edges = canonical_edges(g);
  auto tw = compute_scores(g, SimilarityKind::kTW);
  auto tec = compute_scores(g, SimilarityKind::kTectonic);
  auto jac = compute_scores(g, SimilarityKind::kJaccard);
  auto k3 = compute_scores(g, SimilarityKind::kK3);
  auto k4 = compute_scores(g, SimilarityKind::kK4);
  auto er = compute_scores(g, SimilarityKind::kEffResProxy);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const double t = static_cast<double>(brute.triangles.at(edges[e]));
    const double w = static_cast<double>(brute.wedges.at(edges[e]));
    const double d = static_cast<double>(g.degree(edges[e].u) + g.degree(edges[e].v));
    EXPECT_EQ(tw.values[e], t - w);
    EXPECT_DOUBLE_EQ(tec.values[e], t / d);
    EXPECT_DOUBLE_EQ(jac.values[e], t / (d - t));
    EXPECT_EQ(k3.values[e], t);
    EXPECT_EQ(k4.values[e], static_cast<double>(brute.k4.at(edges[e])));
    EXPECT_DOUBLE_EQ(er.values[e], -2.0 / (2.0 + t));
  }
}

TEST(Scores, ScoreEdgesNeedsK4Counts) {
  Graph g = testing::complete(4);
  auto stats = count_edge_motifs(g, false);
  EXPECT_THROW(score_edges(g, stats, SimilarityKind::kK4), UsageError);
  EXPECT_THROW(score_edges(g, stats, SimilarityKind::kEdgeBetweenness), UsageError);
}

TEST(Scores, NamesRoundTrip) {
  for (auto kind : {SimilarityKind::kTW, SimilarityKind::kTectonic, SimilarityKind::kJaccard,
                    SimilarityKind::kK3, SimilarityKind::kK4, SimilarityKind::kEffResProxy,
                    SimilarityKind::kEdgeBetweenness})
    EXPECT_EQ(parse_similarity_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_similarity_kind("cosine"), UsageError);
  EXPECT_FALSE(is_motif_based(SimilarityKind::kEdgeBetweenness));
  EXPECT_TRUE(is_motif_based(SimilarityKind::kTW));
}

TEST(Scores, CsvUsesExternalLabels) {
  std::istringstream in("10 20\n20 30\n10 30\n");
  auto loaded = parse_edge_list(in, "t");
  auto s = compute_scores(loaded.graph, SimilarityKind::kK3);
  std::ostringstream out;
  write_scores_csv(out, loaded.graph, s, loaded.map);
  EXPECT_EQ(out.str(), "u,v,score\n10,20,1\n10,30,1\n20,30,1\n");
}

}  // namespace
}  // namespace motifclust
