#include "motifclust/betweenness.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <tbb/parallel_for.h>

#include "motifclust/error.hpp"

namespace motifclust {
namespace {

constexpr std::size_t kMaxSourceBlocks = 32;
// Caps the memory held by per-block partial sums at about 256 MiB.
constexpr std::size_t kPartialSumBudget = std::size_t{1} << 25;

struct BfsScratch {
  explicit BfsScratch(NodeId n) : distance(n, kUnseen), paths(n, 0.0), dependency(n, 0.0) {
    order.reserve(n);
  }

  static constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> distance;
  std::vector<double> paths;
  std::vector<double> dependency;
  std::vector<NodeId> order;
};

void accumulate_from(const Graph& g, std::span<const EdgeId> slot_edge, NodeId source,
                     BfsScratch& s, std::vector<double>& edge_bc) {
  s.order.clear();
  s.distance[source] = 0;
  s.paths[source] = 1.0;
  s.order.push_back(source);
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    NodeId x = s.order[head];
    for (NodeId y : g.neighbors(x)) {
      if (s.distance[y] == BfsScratch::kUnseen) {
        s.distance[y] = s.distance[x] + 1;
        s.order.push_back(y);
      }
      if (s.distance[y] == s.distance[x] + 1) s.paths[y] += s.paths[x];
    }
  }

  const auto offsets = g.offsets();
  for (std::size_t i = s.order.size(); i-- > 0;) {
    NodeId w = s.order[i];
    auto nbrs = g.neighbors(w);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      NodeId v = nbrs[k];
      if (s.distance[v] + 1 != s.distance[w]) continue;
      double share = s.paths[v] / s.paths[w] * (1.0 + s.dependency[w]);
      edge_bc[slot_edge[offsets[w] + k]] += share;
      s.dependency[v] += share;
    }
  }

  for (NodeId x : s.order) {
    s.distance[x] = BfsScratch::kUnseen;
    s.paths[x] = 0.0;
    s.dependency[x] = 0.0;
  }
}

}  // namespace

EdgeScores edge_betweenness_scores(const Graph& g, std::size_t node_limit) {
  const NodeId n = g.node_count();
  if (n > node_limit) {
    throw SizeLimitError("edge betweenness refused: graph has " + std::to_string(n) +
                         " nodes, node limit is " + std::to_string(node_limit));
  }
  const EdgeId m = g.edge_count();

  // Edge id of every adjacency slot, so the backward pass needs no search.
  std::vector<EdgeId> slot_edge(g.adjacency().size());
  tbb::parallel_for(NodeId{0}, n, [&](NodeId u) {
    auto nbrs = g.neighbors(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      slot_edge[g.offsets()[u] + k] = *g.edge_id(u, nbrs[k]);
    }
  });

  const std::size_t blocks = std::max<std::size_t>(
      1, std::min<std::size_t>({kMaxSourceBlocks, n, kPartialSumBudget / std::max<EdgeId>(m, 1)}));
  std::vector<std::vector<double>> partial(blocks);
  tbb::parallel_for(std::size_t{0}, blocks, [&](std::size_t b) {
    std::vector<double> sums(m, 0.0);
    BfsScratch scratch(n);
    const NodeId begin = static_cast<NodeId>(static_cast<std::uint64_t>(n) * b / blocks);
    const NodeId end = static_cast<NodeId>(static_cast<std::uint64_t>(n) * (b + 1) / blocks);
    for (NodeId s = begin; s < end; ++s) accumulate_from(g, slot_edge, s, scratch, sums);
    partial[b] = std::move(sums);
  });

  EdgeScores scores{SimilarityKind::kEdgeBetweenness, std::vector<double>(m, 0.0)};
  tbb::parallel_for(EdgeId{0}, m, [&](EdgeId e) {
    double total = 0.0;
    for (const auto& p : partial) total += p[e];
    // Each unordered pair was reached from both of its endpoints.
    scores.values[e] = -(total / 2.0);
  });
  return scores;
}

}  // namespace motifclust
