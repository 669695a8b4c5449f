#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"

namespace motifclust {

class NodeIdMap;

enum class SimilarityKind {
  kTW,              // t - wedge
  kTectonic,        // t / (deg u + deg v)
  kJaccard,         // t / (deg u + deg v - t)
  kK3,              // t
  kK4,              // 4-cliques on the edge
  kEffResProxy,     // -2 / (2 + t), negated effective-resistance bound
  kEdgeBetweenness  // -(edge betweenness)
};

// CLI spelling: tw, tectonic, jaccard, k3, k4, effres, bc.
std::string_view to_string(SimilarityKind kind) noexcept;
SimilarityKind parse_similarity_kind(std::string_view name);

// Kinds computed from EdgeMotifStats alone.
bool is_motif_based(SimilarityKind kind) noexcept;

struct EdgeScores {
  SimilarityKind kind = SimilarityKind::kTW;
  std::vector<double> values;  // indexed by EdgeId
};

// Higher score means more likely intra-community, for every kind.
// Throws UsageError for kEdgeBetweenness, and for kK4 without k4 counts.
EdgeScores score_edges(const Graph& g, const EdgeMotifStats& stats, SimilarityKind kind);

// Counts the motifs the kind needs and scores every edge. Betweenness goes
// through edge_betweenness_scores with the given node limit.
EdgeScores compute_scores(const Graph& g, SimilarityKind kind,
                          std::size_t betweenness_node_limit = 20000);

// CSV with header "u,v,score", one row per canonical edge, 17 significant digits.
void write_scores_csv(std::ostream& out, const Graph& g, const EdgeScores& scores,
                      const NodeIdMap& map);

}  // namespace motifclust
