#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace motifclust {

using NodeId = std::uint32_t;
using EdgeId = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;

  auto operator<=>(const Edge&) const = default;
};

// Immutable undirected simple graph in compressed adjacency form.
//
// Every neighbor segment is strictly increasing and contains no self-loop.
// Undirected edges are numbered by the lexicographic order of their (u, v),
// u < v, pairs; that number is the EdgeId every per-edge array is keyed on.
class Graph {
 public:
  Graph() = default;

  // Builds a simple graph from arbitrary pairs. Self-loops are dropped and
  // duplicate pairs (in either orientation) are collapsed.
  static Graph from_edges(NodeId node_count, std::vector<Edge> edges);

  // Adopts an already-valid CSR structure (sorted, symmetric, loop-free).
  static Graph from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency);

  NodeId node_count() const noexcept { return node_count_; }
  EdgeId edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  // Suffix of neighbors(u) holding the neighbors greater than u. Its i-th entry
  // is the edge first_edge(u) + i.
  std::span<const NodeId> upper_neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + upper_begin_[u], adjacency_.data() + offsets_[u + 1]};
  }

  std::uint64_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  EdgeId first_edge(NodeId u) const noexcept { return edge_begin_[u]; }

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return adjacency_; }

  std::optional<EdgeId> edge_id(NodeId u, NodeId v) const noexcept;
  bool has_edge(NodeId u, NodeId v) const noexcept;

  bool operator==(const Graph& other) const {
    return node_count_ == other.node_count_ && offsets_ == other.offsets_ &&
           adjacency_ == other.adjacency_;
  }

 private:
  void index_upper_edges();

  NodeId node_count_ = 0;
  EdgeId edge_count_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint64_t> upper_begin_;
  std::vector<EdgeId> edge_begin_{0};
};

// All edges as (u, v) pairs with u < v, in EdgeId order.
std::vector<Edge> canonical_edges(const Graph& g);

// Calls fn(edge_id, u, v) for every edge, u < v, spreading nodes over the
// current worker pool. Each edge is visited exactly once.
template <class Fn>
void for_each_edge_parallel(const Graph& g, Fn&& fn);

}  // namespace motifclust

#include "motifclust/detail/graph_parallel.hpp"
