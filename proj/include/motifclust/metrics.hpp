#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motifclust/cluster.hpp"
#include "motifclust/communities.hpp"
#include "motifclust/graph.hpp"

namespace motifclust {

// Newman modularity against the configuration model, summed over all ordered
// node pairs including u == v. Accumulated in integers with one final
// division. nullopt for a graph without edges.
std::optional<double> modularity(const Graph& g, const Partition& p);

struct ClusterMatch {
  std::size_t cluster = 0;
  std::optional<std::size_t> matched;  // groundtruth index, none without overlap
  double jaccard = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t size = 0;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<ClusterMatch> clusters;
};

// Matches every predicted cluster to the groundtruth community of highest
// Jaccard similarity (ties -> lowest groundtruth index) and averages
// per-cluster precision, recall, and F1 weighted by cluster size. Several
// clusters may match the same community.
EvalReport evaluate(const std::vector<std::vector<NodeId>>& predicted, const CommunitySet& truth);
EvalReport evaluate(const Partition& predicted, const CommunitySet& truth,
                    bool include_singletons = true);

// {"precision","recall","f1","clusters":[{id,matched,jaccard,p,r,size}]}
std::string to_json(const EvalReport& report);
// "precision,recall,f1"
std::string to_csv_line(const EvalReport& report);

struct DensityBin {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
};

// Histogram of internal edge density (internal edges / (s choose 2)) over
// communities of size >= 2, in uniform bins over [0, 1]. A density of exactly
// 1 falls into the last bin.
std::vector<DensityBin> density_histogram(const Graph& g, const CommunitySet& truth,
                                          std::size_t bins);

double community_density(const Graph& g, std::span<const NodeId> community);

}  // namespace motifclust
