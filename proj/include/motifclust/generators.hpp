#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Two-block stochastic block model. Block 1 is nodes [0, n), block 2 is
// [n, 2n).
struct SbmParams {
  NodeId n = 50;
  double p1 = 0.1;
  double p2 = 0.8;
  double q = 0.05;
  std::uint64_t seed = 1;
};

// Pairs up to this many nodes are sampled one by one; above it, by geometric
// skips.
inline constexpr NodeId kSbmDirectSamplingLimit = 10000;

// Non-fatal concerns about the parameters (for example q >= min(p1, p2)).
std::vector<std::string> sbm_warnings(const SbmParams& params);

// Every unordered pair is an independent Bernoulli draw with its block
// probability. Row u draws from its own RNG stream, so the output depends only
// on the parameters. Throws UsageError for probabilities outside [0, 1].
Graph gen_sbm(const SbmParams& params);

// True if block(u) is 1 for u < n and 2 otherwise.
inline int sbm_block(const SbmParams& params, NodeId u) { return u < params.n ? 1 : 2; }

struct RmatParams {
  unsigned scale = 10;                 // 2^scale nodes
  std::optional<std::uint64_t> edges;  // explicit edge draws; else edge_factor * 2^scale
  double edge_factor = 5.0;
  std::array<double, 4> a{0.45, 0.15, 0.15, 0.25};  // a11, a12, a21, a22
  std::uint64_t seed = 1;

  std::uint64_t requested_edges() const;
};

// Recursive quadrant descent for every edge draw with a static probability
// matrix, then self-loops and duplicates dropped. Throws UsageError when the
// quadrant probabilities do not sum to 1 within 1e-9.
Graph gen_rmat(const RmatParams& params);

}  // namespace motifclust
