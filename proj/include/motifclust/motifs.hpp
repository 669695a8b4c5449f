#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Per-edge motif counts, indexed by EdgeId.
struct EdgeMotifStats {
  std::vector<std::uint64_t> triangles;   // |N(u) ∩ N(v)|
  std::vector<std::uint64_t> wedges;      // |N(u) ∪ N(v)| - t - 2
  std::vector<std::uint64_t> degree_sum;  // deg(u) + deg(v)
  std::optional<std::vector<std::uint64_t>> k4;  // 4-cliques containing the edge

  std::size_t size() const noexcept { return triangles.size(); }
};

// Size of the intersection of two sorted ranges (linear merge).
std::uint64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept;

// Writes the intersection of two sorted ranges into out (cleared first).
void intersect(std::span<const NodeId> a, std::span<const NodeId> b, std::vector<NodeId>& out);

// Counts every edge independently: the common neighborhood comes from merging
// the two sorted neighbor lists, so no per-worker scratch counts are needed.
EdgeMotifStats count_edge_motifs(const Graph& g, bool with_k4 = false);

}  // namespace motifclust
