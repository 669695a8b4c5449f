#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "motifclust/communities.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/scores.hpp"

namespace motifclust {

struct SweepPoint {
  double delta = 0.0;
  double norm_cc = 0.0;          // components / n
  double norm_edges = 0.0;       // kept edges / m
  double norm_largest_cc = 0.0;  // largest component / n
  double modularity = 0.0;       // of the components, measured on the input graph
  std::optional<double> f1;
};

enum class SelectionRule { kLargestCcJump, kMaxModularity };

std::string_view to_string(SelectionRule rule) noexcept;
// "jump" or "modularity".
SelectionRule parse_selection_rule(std::string_view name);

struct SweepReport {
  SimilarityKind kind = SimilarityKind::kTW;
  std::vector<SweepPoint> points;  // ascending delta
  std::optional<double> selected_delta;
  std::optional<SelectionRule> selection_rule;
};

struct SweepGrid {
  double start = 0.0;
  double end = 0.0;
  double step = 1.0;
};

// start, start + step, ... for every value below end - step / 2. Throws
// UsageError for step <= 0, start >= end, or an empty grid.
std::vector<double> grid_values(const SweepGrid& grid);

// Default jump gate on the normalized largest-component increase.
inline constexpr double kDefaultJumpFactor = 0.1;

// One SweepPoint per grid value. Scores are computed once and every threshold
// reuses them. F1 is filled when truth is given, scoring the components
// (singletons included) against it.
SweepReport sweep(const Graph& g, SimilarityKind kind, const SweepGrid& grid,
                  const CommunitySet* truth = nullptr,
                  std::size_t betweenness_node_limit = 20000);
SweepReport sweep(const Graph& g, const EdgeScores& scores, const std::vector<double>& deltas,
                  const CommunitySet* truth = nullptr);

// LargestCcJump scans deltas from high to low and locates the consecutive pair
// with the largest rise in norm_largest_cc. If that rise is at least
// jump_factor, the higher delta of the pair is returned; otherwise the rule
// falls back to MaxModularity, which returns the delta of highest modularity
// (ties -> larger delta). Needs at least two points.
double select_threshold(const SweepReport& report, SelectionRule rule,
                        double jump_factor = kDefaultJumpFactor);

// Runs select_threshold and records the delta plus the rule that produced it.
void apply_selection(SweepReport& report, SelectionRule rule,
                     double jump_factor = kDefaultJumpFactor);

// "delta,norm_cc,norm_edges,norm_largest_cc,modularity[,f1]" rows, plus a
// "# selected=<delta> rule=<rule>" trailer when a selection was made.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace motifclust
