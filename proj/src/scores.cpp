#include "motifclust/scores.hpp"

#include <cstdio>
#include <ostream>

#include <tbb/parallel_for.h>

#include "motifclust/betweenness.hpp"
#include "motifclust/error.hpp"
#include "motifclust/io.hpp"

namespace motifclust {

std::string_view to_string(SimilarityKind kind) noexcept {
  switch (kind) {
    case SimilarityKind::kTW: return "tw";
    case SimilarityKind::kTectonic: return "tectonic";
    case SimilarityKind::kJaccard: return "jaccard";
    case SimilarityKind::kK3: return "k3";
    case SimilarityKind::kK4: return "k4";
    case SimilarityKind::kEffResProxy: return "effres";
    case SimilarityKind::kEdgeBetweenness: return "bc";
  }
  return "unknown";
}

SimilarityKind parse_similarity_kind(std::string_view name) {
  for (auto kind : {SimilarityKind::kTW, SimilarityKind::kTectonic, SimilarityKind::kJaccard,
                    SimilarityKind::kK3, SimilarityKind::kK4, SimilarityKind::kEffResProxy,
                    SimilarityKind::kEdgeBetweenness}) {
    if (to_string(kind) == name) return kind;
  }
  throw UsageError("unknown similarity '" + std::string(name) +
                   "' (expected tw|tectonic|jaccard|k3|k4|effres|bc)");
}

bool is_motif_based(SimilarityKind kind) noexcept {
  return kind != SimilarityKind::kEdgeBetweenness;
}

EdgeScores score_edges(const Graph& g, const EdgeMotifStats& stats, SimilarityKind kind) {
  if (kind == SimilarityKind::kEdgeBetweenness) {
    throw UsageError("betweenness scores are computed by edge_betweenness_scores");
  }
  if (kind == SimilarityKind::kK4 && !stats.k4) {
    throw UsageError("K4 scores need motif counts gathered with k4 enabled");
  }
  if (stats.size() != g.edge_count()) {
    throw UsageError("motif counts do not match the graph's edge count");
  }

  EdgeScores scores{kind, std::vector<double>(g.edge_count())};
  auto& out = scores.values;
  const auto& t = stats.triangles;
  const auto& w = stats.wedges;
  const auto& d = stats.degree_sum;
  tbb::parallel_for(EdgeId{0}, g.edge_count(), [&](EdgeId e) {
    const double tri = static_cast<double>(t[e]);
    switch (kind) {
      case SimilarityKind::kTW:
        out[e] = tri - static_cast<double>(w[e]);
        break;
      case SimilarityKind::kTectonic:
        out[e] = tri / static_cast<double>(d[e]);
        break;
      case SimilarityKind::kJaccard:
        out[e] = tri / static_cast<double>(d[e] - t[e]);
        break;
      case SimilarityKind::kK3:
        out[e] = tri;
        break;
      case SimilarityKind::kK4:
        out[e] = static_cast<double>((*stats.k4)[e]);
        break;
      case SimilarityKind::kEffResProxy:
        out[e] = -2.0 / (2.0 + tri);
        break;
      case SimilarityKind::kEdgeBetweenness:
        break;
    }
  });
  return scores;
}

EdgeScores compute_scores(const Graph& g, SimilarityKind kind,
                          std::size_t betweenness_node_limit) {
  if (kind == SimilarityKind::kEdgeBetweenness) {
    return edge_betweenness_scores(g, betweenness_node_limit);
  }
  return score_edges(g, count_edge_motifs(g, kind == SimilarityKind::kK4), kind);
}

void write_scores_csv(std::ostream& out, const Graph& g, const EdgeScores& scores,
                      const NodeIdMap& map) {
  out << "u,v,score\n";
  char buf[64];
  for (NodeId u = 0; u < g.node_count(); ++u) {
    EdgeId e = g.first_edge(u);
    for (NodeId v : g.upper_neighbors(u)) {
      std::snprintf(buf, sizeof buf, "%.17g", scores.values[e++]);
      out << map.label(u) << ',' << map.label(v) << ',' << buf << '\n';
    }
  }
}

}  // namespace motifclust
