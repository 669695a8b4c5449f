#include "motifclust/graph.hpp"

#include <algorithm>
#include <limits>

#include <tbb/parallel_for.h>
#include <tbb/parallel_sort.h>

#include "motifclust/error.hpp"

namespace motifclust {

Graph Graph::from_edges(NodeId node_count, std::vector<Edge> edges) {
  // Each undirected edge becomes two packed (source << 32 | target) keys; one
  // sort then yields the CSR adjacency in order.
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw UsageError("edge endpoint out of range for a graph with " +
                       std::to_string(node_count) + " nodes");
    }
    if (e.u == e.v) continue;
    keys.push_back(static_cast<std::uint64_t>(e.u) << 32 | e.v);
    keys.push_back(static_cast<std::uint64_t>(e.v) << 32 | e.u);
  }
  edges.clear();
  edges.shrink_to_fit();

  tbb::parallel_sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(node_count) + 1, 0);
  std::vector<NodeId> adjacency(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ++offsets[(keys[i] >> 32) + 1];
    adjacency[i] = static_cast<NodeId>(keys[i] & 0xffffffffu);
  }
  for (std::size_t u = 0; u < node_count; ++u) offsets[u + 1] += offsets[u];
  return from_csr(std::move(offsets), std::move(adjacency));
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency) {
  if (offsets.empty() || offsets.back() != adjacency.size()) {
    throw UsageError("offsets do not describe the adjacency array");
  }
  if (offsets.size() - 1 > std::numeric_limits<NodeId>::max()) {
    throw UsageError("node count exceeds the 32-bit node id range");
  }
  Graph g;
  g.node_count_ = static_cast<NodeId>(offsets.size() - 1);
  g.edge_count_ = adjacency.size() / 2;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  g.index_upper_edges();
  return g;
}

void Graph::index_upper_edges() {
  upper_begin_.assign(node_count_, 0);
  edge_begin_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  tbb::parallel_for(NodeId{0}, node_count_, [&](NodeId u) {
    auto segment = neighbors(u);
    auto it = std::upper_bound(segment.begin(), segment.end(), u);
    upper_begin_[u] = offsets_[u] + static_cast<std::uint64_t>(it - segment.begin());
  });
  for (NodeId u = 0; u < node_count_; ++u) {
    edge_begin_[u + 1] = edge_begin_[u] + (offsets_[u + 1] - upper_begin_[u]);
  }
}

std::optional<EdgeId> Graph::edge_id(NodeId u, NodeId v) const noexcept {
  if (u == v || u >= node_count_ || v >= node_count_) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto upper = upper_neighbors(u);
  auto it = std::lower_bound(upper.begin(), upper.end(), v);
  if (it == upper.end() || *it != v) return std::nullopt;
  return edge_begin_[u] + static_cast<EdgeId>(it - upper.begin());
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count_ || v >= node_count_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto segment = neighbors(u);
  return std::binary_search(segment.begin(), segment.end(), v);
}

std::vector<Edge> canonical_edges(const Graph& g) {
  std::vector<Edge> edges(g.edge_count());
  for_each_edge_parallel(g, [&](EdgeId e, NodeId u, NodeId v) { edges[e] = {u, v}; });
  return edges;
}

}  // namespace motifclust
