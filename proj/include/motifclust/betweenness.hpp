#pragma once

#include <cstddef>

#include "motifclust/graph.hpp"
#include "motifclust/scores.hpp"

namespace motifclust {

inline constexpr std::size_t kDefaultBetweennessNodeLimit = 20000;

// Exact edge betweenness by single-source shortest-path dependency
// accumulation from every node. Unnormalized: every unordered pair {s, t}
// contributes the fraction of its shortest paths crossing the edge, once.
// Scores are the negated betweenness.
//
// Sources are split into a fixed number of blocks whose partial sums are
// added in block order, so the result does not depend on the worker count.
//
// Throws SizeLimitError when the graph has more than node_limit nodes.
EdgeScores edge_betweenness_scores(const Graph& g,
                                   std::size_t node_limit = kDefaultBetweennessNodeLimit);

}  // namespace motifclust
