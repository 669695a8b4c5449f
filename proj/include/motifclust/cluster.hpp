#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/scores.hpp"

namespace motifclust {

// Non-overlapping node -> community assignment. A community is labelled by
// its minimum node id, so labels[u] <= u and labels[labels[u]] == labels[u].
struct Partition {
  std::vector<NodeId> labels;
  std::size_t community_count = 0;

  bool operator==(const Partition&) const = default;
};

// 1 where the edge survives thresholding: score >= delta. Indexed by EdgeId.
std::vector<std::uint8_t> kept_edge_mask(const EdgeScores& scores, double delta);

// Subgraph keeping exactly the edges whose score is >= delta (edges scoring
// strictly below delta are removed). The node set is unchanged.
Graph sparsify(const Graph& g, const EdgeScores& scores, double delta);

// Subgraph keeping the edges flagged in mask.
Graph keep_edges(const Graph& g, const std::vector<std::uint8_t>& mask);

// labels[u] = minimum node id reachable from u.
Partition connected_components(const Graph& g);

// Components of g restricted to the edges flagged in mask, without building
// the subgraph.
Partition connected_components(const Graph& g, const std::vector<std::uint8_t>& mask);

// Score, threshold, and label components.
Partition cluster(const Graph& g, SimilarityKind kind, double delta,
                  std::size_t betweenness_node_limit = 20000);
Partition cluster(const Graph& g, const EdgeScores& scores, double delta);

// Members of each community in ascending order, communities ordered by label.
std::vector<std::vector<NodeId>> partition_members(const Partition& p,
                                                   bool include_singletons = true);

std::size_t largest_community_size(const Partition& p);
std::size_t singleton_count(const Partition& p);

}  // namespace motifclust
