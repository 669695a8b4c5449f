#include "motifclust/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include "motifclust/error.hpp"

namespace motifclust {
namespace {

struct CutCounts {
  std::uint64_t edges = 0, edges_cut = 0;
  std::uint64_t wedges = 0, wedges_cut = 0;
  std::uint64_t triangles = 0, triangles_cut = 0;

  CutCounts& operator+=(const CutCounts& o) {
    edges += o.edges;
    edges_cut += o.edges_cut;
    wedges += o.wedges;
    wedges_cut += o.wedges_cut;
    triangles += o.triangles;
    triangles_cut += o.triangles_cut;
    return *this;
  }
};

std::optional<double> fraction(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return std::nullopt;
  return static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

std::optional<double> score_separation(const Graph& g, const EdgeScores& scores,
                                       const CommunitySet& truth) {
  if (truth.empty()) throw UsageError("score separation needs at least one community");
  if (scores.values.size() != g.edge_count()) {
    throw UsageError("scores do not match the graph's edge count");
  }
  MembershipIndex index(truth, g.node_count());

  // Sequential pass: the sums must not depend on the worker count.
  double inside_sum = 0.0, across_sum = 0.0, total = 0.0;
  std::uint64_t inside = 0, across = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    EdgeId e = g.first_edge(u);
    for (NodeId v : g.upper_neighbors(u)) {
      double s = scores.values[e++];
      total += s;
      if (index.share_community(u, v)) {
        inside_sum += s;
        ++inside;
      } else {
        across_sum += s;
        ++across;
      }
    }
  }
  if (inside == 0 || across == 0) return std::nullopt;

  const double mean = total / static_cast<double>(g.edge_count());
  double squares = 0.0;
  for (double s : scores.values) squares += (s - mean) * (s - mean);
  const double sd = std::sqrt(squares / static_cast<double>(g.edge_count()));
  if (sd == 0.0) return std::nullopt;

  return (inside_sum / static_cast<double>(inside) - across_sum / static_cast<double>(across)) /
         sd;
}

MotifCutFractions motif_cut_fractions(const Graph& g, const CommunitySet& truth) {
  if (truth.empty()) throw UsageError("motif cut fractions need at least one community");
  MembershipIndex index(truth, g.node_count());

  CutCounts counts = tbb::parallel_reduce(
      tbb::blocked_range<NodeId>(0, g.node_count(), 64), CutCounts{},
      [&](const tbb::blocked_range<NodeId>& range, CutCounts acc) {
        for (NodeId c = range.begin(); c != range.end(); ++c) {
          auto nbrs = g.neighbors(c);
          // Edges and triangles are charged to their smallest node, wedges to
          // their center.
          for (NodeId a : g.upper_neighbors(c)) {
            ++acc.edges;
            if (!index.share_community(c, a)) ++acc.edges_cut;
            auto na = g.upper_neighbors(a);
            auto i = na.begin();
            // Triangles c < a < b with b adjacent to both.
            auto uc = g.upper_neighbors(c);
            auto j = std::lower_bound(uc.begin(), uc.end(), a + 1);
            while (i != na.end() && j != uc.end()) {
              if (*i < *j) {
                ++i;
              } else if (*j < *i) {
                ++j;
              } else {
                ++acc.triangles;
                if (!index.share_community(c, a, *i)) ++acc.triangles_cut;
                ++i;
                ++j;
              }
            }
          }
          for (std::size_t x = 0; x < nbrs.size(); ++x) {
            for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
              ++acc.wedges;
              if (!index.share_community(nbrs[x], c, nbrs[y])) ++acc.wedges_cut;
            }
          }
        }
        return acc;
      },
      [](CutCounts a, const CutCounts& b) { return a += b; });

  MotifCutFractions out;
  out.edges = counts.edges;
  out.wedges = counts.wedges;
  out.triangles = counts.triangles;
  out.edges_cut = fraction(counts.edges_cut, counts.edges);
  out.wedges_cut = fraction(counts.wedges_cut, counts.wedges);
  out.triangles_cut = fraction(counts.triangles_cut, counts.triangles);
  return out;
}

}  // namespace motifclust
