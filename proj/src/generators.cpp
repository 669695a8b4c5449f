#include "motifclust/generators.hpp"

#include <cmath>
#include <numeric>

#include <tbb/parallel_for.h>

#include "motifclust/error.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw UsageError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

// Appends (u, v) for every v in [begin, end) accepted with probability p.
void sample_row(NodeId u, NodeId begin, NodeId end, double p, bool skip_sampling,
                std::mt19937_64& gen, std::vector<Edge>& out) {
  if (begin >= end || p <= 0.0) return;
  if (p >= 1.0) {
    for (NodeId v = begin; v < end; ++v) out.push_back({u, v});
    return;
  }
  if (!skip_sampling) {
    for (NodeId v = begin; v < end; ++v) {
      if (uniform01(gen) < p) out.push_back({u, v});
    }
    return;
  }
  // Gap to the next success is geometric: floor(log(1 - r) / log(1 - p)).
  const double log_miss = std::log1p(-p);
  double v = static_cast<double>(begin) - 1.0;
  for (;;) {
    const double r = uniform01(gen);
    v += 1.0 + std::floor(std::log1p(-r) / log_miss);
    if (v >= static_cast<double>(end)) break;
    out.push_back({u, static_cast<NodeId>(v)});
  }
}

}  // namespace

std::vector<std::string> sbm_warnings(const SbmParams& params) {
  std::vector<std::string> warnings;
  if (!(params.q < std::min(params.p1, params.p2))) {
    warnings.push_back("q is not below min(p1, p2); the blocks are not assortative");
  }
  return warnings;
}

Graph gen_sbm(const SbmParams& params) {
  check_probability(params.p1, "p1");
  check_probability(params.p2, "p2");
  check_probability(params.q, "q");
  const NodeId n = params.n;
  if (static_cast<std::uint64_t>(n) * 2 > std::numeric_limits<NodeId>::max()) {
    throw UsageError("block size too large");
  }
  const NodeId total = 2 * n;
  const bool skip_sampling = total > kSbmDirectSamplingLimit;

  std::vector<std::vector<Edge>> rows(total);
  tbb::parallel_for(NodeId{0}, total, [&](NodeId u) {
    auto gen = make_stream(params.seed, u);
    auto& row = rows[u];
    if (u < n) {
      sample_row(u, u + 1, n, params.p1, skip_sampling, gen, row);
      sample_row(u, n, total, params.q, skip_sampling, gen, row);
    } else {
      sample_row(u, u + 1, total, params.p2, skip_sampling, gen, row);
    }
  });

  std::size_t count = 0;
  for (const auto& row : rows) count += row.size();
  std::vector<Edge> edges;
  edges.reserve(count);
  for (auto& row : rows) {
    edges.insert(edges.end(), row.begin(), row.end());
    std::vector<Edge>().swap(row);
  }
  return Graph::from_edges(total, std::move(edges));
}

std::uint64_t RmatParams::requested_edges() const {
  if (edges) return *edges;
  return static_cast<std::uint64_t>(std::llround(edge_factor * std::ldexp(1.0, static_cast<int>(scale))));
}

Graph gen_rmat(const RmatParams& params) {
  if (params.scale == 0 || params.scale > 31) throw UsageError("R-MAT scale must be in [1, 31]");
  for (double p : params.a) check_probability(p, "R-MAT quadrant probability");
  const double sum = std::accumulate(params.a.begin(), params.a.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) {
    throw UsageError("R-MAT quadrant probabilities must sum to 1, got " + std::to_string(sum));
  }
  const double c1 = params.a[0];
  const double c2 = c1 + params.a[1];
  const double c3 = c2 + params.a[2];

  const std::uint64_t m = params.requested_edges();
  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t chunks = (m + kChunk - 1) / kChunk;
  std::vector<Edge> edges(m);
  tbb::parallel_for(std::uint64_t{0}, chunks, [&](std::uint64_t c) {
    auto gen = make_stream(params.seed, c);
    const std::uint64_t end = std::min(m, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) {
      NodeId u = 0, v = 0;
      for (unsigned level = 0; level < params.scale; ++level) {
        const double r = uniform01(gen);
        const NodeId row = r >= c2;
        const NodeId col = (r >= c1 && r < c2) || r >= c3;
        u = (u << 1) | row;
        v = (v << 1) | col;
      }
      edges[i] = {u, v};
    }
  });
  return Graph::from_edges(static_cast<NodeId>(std::uint64_t{1} << params.scale),
                           std::move(edges));
}

}  // namespace motifclust
