#include "motifclust/metrics.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>
#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_reduce.h>

#include "motifclust/error.hpp"

namespace motifclust {

std::optional<double> modularity(const Graph& g, const Partition& p) {
  const EdgeId m = g.edge_count();
  if (m == 0) return std::nullopt;
  const NodeId n = g.node_count();
  if (p.labels.size() != n) throw UsageError("partition does not match the graph");

  // Q = (4 m * m_in - sum_c vol(c)^2) / (4 m^2), where m_in counts intra-
  // community edges and vol(c) is the degree total of community c.
  using Wide = unsigned __int128;
  std::vector<std::uint64_t> volume(n, 0);
  std::uint64_t intra = 0;
  for (NodeId u = 0; u < n; ++u) {
    volume[p.labels[u]] += g.degree(u);
    for (NodeId v : g.upper_neighbors(u)) intra += p.labels[u] == p.labels[v];
  }
  Wide volume_squares = 0;
  for (std::uint64_t vol : volume) volume_squares += static_cast<Wide>(vol) * vol;

  const Wide numerator_pos = static_cast<Wide>(4) * m * intra;
  const Wide denominator = static_cast<Wide>(4) * m * m;
  const long double num = numerator_pos >= volume_squares
                              ? static_cast<long double>(numerator_pos - volume_squares)
                              : -static_cast<long double>(volume_squares - numerator_pos);
  return static_cast<double>(num / static_cast<long double>(denominator));
}

EvalReport evaluate(const std::vector<std::vector<NodeId>>& predicted, const CommunitySet& truth) {
  if (predicted.empty()) throw UsageError("evaluation needs at least one predicted cluster");
  if (truth.empty()) throw UsageError("evaluation needs at least one groundtruth community");

  NodeId bound = truth.id_bound();
  for (const auto& c : predicted) {
    for (NodeId u : c) bound = std::max(bound, static_cast<NodeId>(u + 1));
  }
  MembershipIndex index(truth, bound);

  EvalReport report;
  report.clusters.resize(predicted.size());
  tbb::parallel_for(std::size_t{0}, predicted.size(), [&](std::size_t i) {
    const auto& cluster = predicted[i];
    std::unordered_map<std::uint32_t, std::uint64_t> overlap;
    for (NodeId u : cluster) {
      for (std::uint32_t j : index.memberships(u)) ++overlap[j];
    }
    const std::uint64_t s = cluster.size();
    std::optional<std::uint32_t> best;
    std::uint64_t best_inter = 0, best_union = 1;
    for (const auto& [j, inter] : overlap) {
      const std::uint64_t uni = truth[j].size() + s - inter;
      // inter / uni vs best_inter / best_union, compared exactly.
      const unsigned __int128 lhs = static_cast<unsigned __int128>(inter) * best_union;
      const unsigned __int128 rhs = static_cast<unsigned __int128>(best_inter) * uni;
      if (!best || lhs > rhs || (lhs == rhs && j < *best)) {
        best = j;
        best_inter = inter;
        best_union = uni;
      }
    }
    ClusterMatch& match = report.clusters[i];
    match.cluster = i;
    match.size = s;
    if (best) {
      match.matched = *best;
      match.jaccard = static_cast<double>(best_inter) / static_cast<double>(best_union);
      match.precision = static_cast<double>(best_inter) / static_cast<double>(s);
      match.recall = static_cast<double>(best_inter) / static_cast<double>(truth[*best].size());
    }
  });

  double total = 0.0, p = 0.0, r = 0.0, f = 0.0;
  for (const ClusterMatch& c : report.clusters) {
    const double w = static_cast<double>(c.size);
    total += w;
    p += c.precision * w;
    r += c.recall * w;
    if (c.precision + c.recall > 0.0) {
      f += 2.0 * c.precision * c.recall * w / (c.precision + c.recall);
    }
  }
  if (total == 0.0) throw UsageError("predicted clusters are all empty");
  report.precision = p / total;
  report.recall = r / total;
  report.f1 = f / total;
  return report;
}

EvalReport evaluate(const Partition& predicted, const CommunitySet& truth,
                    bool include_singletons) {
  return evaluate(partition_members(predicted, include_singletons), truth);
}

std::string to_json(const EvalReport& report) {
  nlohmann::ordered_json clusters = nlohmann::ordered_json::array();
  for (const ClusterMatch& c : report.clusters) {
    nlohmann::ordered_json entry;
    entry["id"] = c.cluster;
    entry["matched"] = c.matched ? nlohmann::ordered_json(*c.matched) : nlohmann::ordered_json();
    entry["jaccard"] = c.jaccard;
    entry["p"] = c.precision;
    entry["r"] = c.recall;
    entry["size"] = c.size;
    clusters.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["precision"] = report.precision;
  out["recall"] = report.recall;
  out["f1"] = report.f1;
  out["clusters"] = std::move(clusters);
  return out.dump();
}

std::string to_csv_line(const EvalReport& report) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", report.precision, report.recall,
                report.f1);
  return buf;
}

double community_density(const Graph& g, std::span<const NodeId> community) {
  const std::uint64_t s = community.size();
  if (s < 2) return 0.0;
  std::uint64_t internal = 0;
  for (NodeId u : community) {
    if (u >= g.node_count()) continue;
    for (NodeId v : g.upper_neighbors(u)) {
      internal += std::binary_search(community.begin(), community.end(), v);
    }
  }
  return static_cast<double>(internal) / (static_cast<double>(s) * (s - 1) / 2.0);
}

std::vector<DensityBin> density_histogram(const Graph& g, const CommunitySet& truth,
                                          std::size_t bins) {
  if (bins == 0) throw UsageError("density histogram needs at least one bin");
  std::vector<DensityBin> hist(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    hist[b].lower = static_cast<double>(b) / static_cast<double>(bins);
    hist[b].upper = static_cast<double>(b + 1) / static_cast<double>(bins);
  }
  std::vector<double> densities(truth.size(), -1.0);
  tbb::parallel_for(std::size_t{0}, truth.size(), [&](std::size_t j) {
    if (truth[j].size() >= 2) densities[j] = community_density(g, truth[j]);
  });
  for (double d : densities) {
    if (d < 0.0) continue;
    auto b = static_cast<std::size_t>(d * static_cast<double>(bins));
    ++hist[std::min(b, bins - 1)].count;
  }
  return hist;
}

}  // namespace motifclust
