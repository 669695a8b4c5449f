#include "motifclust/cluster.hpp"

#include <algorithm>
#include <atomic>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_reduce.h>
#include <tbb/parallel_scan.h>

#include "motifclust/error.hpp"

namespace motifclust {
namespace {

// Lock-free union-find that always hooks the larger root under the smaller,
// so every root is the minimum id of its set regardless of interleaving.
class MinRootUnionFind {
 public:
  explicit MinRootUnionFind(NodeId n) : parent_(n) {
    tbb::parallel_for(NodeId{0}, n, [&](NodeId u) { parent_[u] = u; });
  }

  NodeId find(NodeId x) {
    for (;;) {
      NodeId p = load(x);
      if (p == x) return x;
      NodeId grand = load(p);
      if (grand == p) return p;
      // Path halving; x is not a root so no hook can race on this slot.
      std::atomic_ref<NodeId>(parent_[x]).store(grand, std::memory_order_relaxed);
      x = grand;
    }
  }

  void unite(NodeId a, NodeId b) {
    for (;;) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (a < b) std::swap(a, b);
      NodeId expected = a;
      if (std::atomic_ref<NodeId>(parent_[a]).compare_exchange_strong(
              expected, b, std::memory_order_acq_rel)) {
        return;
      }
    }
  }

  Partition labels() {
    const NodeId n = static_cast<NodeId>(parent_.size());
    Partition p;
    p.labels.resize(n);
    tbb::parallel_for(NodeId{0}, n, [&](NodeId u) { p.labels[u] = find(u); });
    p.community_count = tbb::parallel_reduce(
        tbb::blocked_range<NodeId>(0, n), std::size_t{0},
        [&](const tbb::blocked_range<NodeId>& r, std::size_t acc) {
          for (NodeId u = r.begin(); u != r.end(); ++u) acc += p.labels[u] == u;
          return acc;
        },
        std::plus<>());
    return p;
  }

 private:
  NodeId load(NodeId x) {
    return std::atomic_ref<NodeId>(parent_[x]).load(std::memory_order_acquire);
  }

  std::vector<NodeId> parent_;
};

}  // namespace

std::vector<std::uint8_t> kept_edge_mask(const EdgeScores& scores, double delta) {
  std::vector<std::uint8_t> mask(scores.values.size());
  tbb::parallel_for(std::size_t{0}, mask.size(),
                    [&](std::size_t e) { mask[e] = !(scores.values[e] < delta); });
  return mask;
}

Graph keep_edges(const Graph& g, const std::vector<std::uint8_t>& mask) {
  if (mask.size() != g.edge_count()) throw UsageError("edge mask does not match the graph");
  const NodeId n = g.node_count();
  const auto offsets = g.offsets();

  // Per-slot keep flags, then a prefix sum over per-node kept degrees.
  std::vector<std::uint8_t> slot_kept(g.adjacency().size());
  std::vector<std::uint64_t> new_offsets(static_cast<std::size_t>(n) + 1, 0);
  tbb::parallel_for(tbb::blocked_range<NodeId>(0, n, 256), [&](const tbb::blocked_range<NodeId>& r) {
    for (NodeId u = r.begin(); u != r.end(); ++u) {
      auto nbrs = g.neighbors(u);
      std::uint64_t kept = 0;
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const bool keep = mask[*g.edge_id(u, nbrs[k])] != 0;
        slot_kept[offsets[u] + k] = keep;
        kept += keep;
      }
      new_offsets[u + 1] = kept;
    }
  });
  tbb::parallel_scan(
      tbb::blocked_range<std::size_t>(1, new_offsets.size()), std::uint64_t{0},
      [&](const tbb::blocked_range<std::size_t>& r, std::uint64_t sum, bool final) {
        for (std::size_t i = r.begin(); i != r.end(); ++i) {
          sum += new_offsets[i];
          if (final) new_offsets[i] = sum;
        }
        return sum;
      },
      std::plus<>());

  std::vector<NodeId> adjacency(new_offsets.back());
  tbb::parallel_for(tbb::blocked_range<NodeId>(0, n, 256), [&](const tbb::blocked_range<NodeId>& r) {
    for (NodeId u = r.begin(); u != r.end(); ++u) {
      auto nbrs = g.neighbors(u);
      std::uint64_t out = new_offsets[u];
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (slot_kept[offsets[u] + k]) adjacency[out++] = nbrs[k];
      }
    }
  });
  return Graph::from_csr(std::move(new_offsets), std::move(adjacency));
}

Graph sparsify(const Graph& g, const EdgeScores& scores, double delta) {
  if (scores.values.size() != g.edge_count()) {
    throw UsageError("scores do not match the graph's edge count");
  }
  return keep_edges(g, kept_edge_mask(scores, delta));
}

Partition connected_components(const Graph& g) {
  MinRootUnionFind uf(g.node_count());
  for_each_edge_parallel(g, [&](EdgeId, NodeId u, NodeId v) { uf.unite(u, v); });
  return uf.labels();
}

Partition connected_components(const Graph& g, const std::vector<std::uint8_t>& mask) {
  if (mask.size() != g.edge_count()) throw UsageError("edge mask does not match the graph");
  MinRootUnionFind uf(g.node_count());
  for_each_edge_parallel(g, [&](EdgeId e, NodeId u, NodeId v) {
    if (mask[e]) uf.unite(u, v);
  });
  return uf.labels();
}

Partition cluster(const Graph& g, const EdgeScores& scores, double delta) {
  return connected_components(sparsify(g, scores, delta));
}

Partition cluster(const Graph& g, SimilarityKind kind, double delta,
                  std::size_t betweenness_node_limit) {
  return cluster(g, compute_scores(g, kind, betweenness_node_limit), delta);
}

std::vector<std::vector<NodeId>> partition_members(const Partition& p, bool include_singletons) {
  const std::size_t n = p.labels.size();
  std::vector<std::size_t> sizes(n, 0);
  for (NodeId label : p.labels) ++sizes[label];
  std::vector<std::size_t> slot(n, 0);
  std::vector<std::vector<NodeId>> members;
  members.reserve(p.community_count);
  for (std::size_t u = 0; u < n; ++u) {
    if (p.labels[u] != u) continue;
    if (!include_singletons && sizes[u] == 1) continue;
    slot[u] = members.size();
    members.emplace_back().reserve(sizes[u]);
  }
  for (std::size_t u = 0; u < n; ++u) {
    NodeId label = p.labels[u];
    if (!include_singletons && sizes[label] == 1) continue;
    members[slot[label]].push_back(static_cast<NodeId>(u));
  }
  return members;
}

std::size_t largest_community_size(const Partition& p) {
  std::vector<std::size_t> sizes(p.labels.size(), 0);
  std::size_t largest = 0;
  for (NodeId label : p.labels) largest = std::max(largest, ++sizes[label]);
  return largest;
}

std::size_t singleton_count(const Partition& p) {
  std::vector<std::size_t> sizes(p.labels.size(), 0);
  for (NodeId label : p.labels) ++sizes[label];
  return static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), std::size_t{1}));
}

}  // namespace motifclust
