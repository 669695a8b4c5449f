#pragma once

#include <optional>

#include "motifclust/communities.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/scores.hpp"

namespace motifclust {

// (mean inside score - mean across score) / standard deviation of all scores.
// An edge is inside when some community holds both endpoints. Empty classes
// or a zero standard deviation give nullopt.
std::optional<double> score_separation(const Graph& g, const EdgeScores& scores,
                                       const CommunitySet& truth);

// Fraction of each motif class not contained in any single community.
// Wedges are all paths of length two (closed or open); nullopt when the graph
// has no motif of that class.
struct MotifCutFractions {
  std::optional<double> edges_cut;
  std::optional<double> wedges_cut;
  std::optional<double> triangles_cut;
  std::uint64_t edges = 0;
  std::uint64_t wedges = 0;
  std::uint64_t triangles = 0;
};

MotifCutFractions motif_cut_fractions(const Graph& g, const CommunitySet& truth);

}  // namespace motifclust
