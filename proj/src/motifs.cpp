#include "motifclust/motifs.hpp"

#include <algorithm>

#include <tbb/enumerable_thread_specific.h>

namespace motifclust {

std::uint64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  std::uint64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void intersect(std::span<const NodeId> a, std::span<const NodeId> b, std::vector<NodeId>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

EdgeMotifStats count_edge_motifs(const Graph& g, bool with_k4) {
  const EdgeId m = g.edge_count();
  EdgeMotifStats stats;
  stats.triangles.resize(m);
  stats.wedges.resize(m);
  stats.degree_sum.resize(m);

  if (!with_k4) {
    for_each_edge_parallel(g, [&](EdgeId e, NodeId u, NodeId v) {
      const std::uint64_t t = intersection_size(g.neighbors(u), g.neighbors(v));
      const std::uint64_t deg_sum = g.degree(u) + g.degree(v);
      stats.triangles[e] = t;
      stats.degree_sum[e] = deg_sum;
      // |N(u) ∪ N(v)| = deg_sum - t, and u, v sit in each other's lists.
      stats.wedges[e] = deg_sum - 2 * t - 2;
    });
    return stats;
  }

  std::vector<std::uint64_t> k4(m);
  tbb::enumerable_thread_specific<std::vector<NodeId>> scratch;
  for_each_edge_parallel(g, [&](EdgeId e, NodeId u, NodeId v) {
    std::vector<NodeId>& common = scratch.local();
    intersect(g.neighbors(u), g.neighbors(v), common);
    const std::uint64_t t = common.size();
    const std::uint64_t deg_sum = g.degree(u) + g.degree(v);
    stats.triangles[e] = t;
    stats.degree_sum[e] = deg_sum;
    stats.wedges[e] = deg_sum - 2 * t - 2;

    std::uint64_t cliques = 0;
    for (std::size_t i = 0; i < common.size(); ++i) {
      auto nw = g.neighbors(common[i]);
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (std::binary_search(nw.begin(), nw.end(), common[j])) ++cliques;
      }
    }
    k4[e] = cliques;
  });
  stats.k4 = std::move(k4);
  return stats;
}

}  // namespace motifclust
