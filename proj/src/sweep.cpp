#include "motifclust/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <tbb/parallel_reduce.h>

#include "motifclust/cluster.hpp"
#include "motifclust/error.hpp"
#include "motifclust/metrics.hpp"

namespace motifclust {
namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Modularity rule result before any fallback bookkeeping.
double max_modularity_delta(const SweepReport& report) {
  const SweepPoint* best = &report.points.front();
  for (const SweepPoint& p : report.points) {
    if (p.modularity > best->modularity ||
        (p.modularity == best->modularity && p.delta > best->delta)) {
      best = &p;
    }
  }
  return best->delta;
}

std::optional<double> largest_cc_jump_delta(const SweepReport& report, double jump_factor) {
  const auto& pts = report.points;
  double best_rise = -1.0;
  std::size_t best_hi = 0;
  // Points are ascending, so walking i downward visits deltas high to low.
  for (std::size_t i = pts.size() - 1; i > 0; --i) {
    const double rise = pts[i - 1].norm_largest_cc - pts[i].norm_largest_cc;
    if (rise > best_rise) {
      best_rise = rise;
      best_hi = i;
    }
  }
  if (best_rise >= jump_factor) return pts[best_hi].delta;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SelectionRule rule) noexcept {
  return rule == SelectionRule::kLargestCcJump ? "jump" : "modularity";
}

SelectionRule parse_selection_rule(std::string_view name) {
  if (name == "jump") return SelectionRule::kLargestCcJump;
  if (name == "modularity") return SelectionRule::kMaxModularity;
  throw UsageError("unknown selection rule '" + std::string(name) + "' (expected jump|modularity)");
}

std::vector<double> grid_values(const SweepGrid& grid) {
  if (!(grid.step > 0.0) || !std::isfinite(grid.step)) {
    throw UsageError("sweep step must be positive");
  }
  if (!(grid.start < grid.end)) throw UsageError("sweep start must be below end");
  std::vector<double> values;
  const double limit = grid.end - grid.step / 2.0;
  for (std::size_t i = 0;; ++i) {
    const double delta = grid.start + static_cast<double>(i) * grid.step;
    if (!(delta < limit)) break;
    values.push_back(delta);
  }
  if (values.empty()) throw UsageError("sweep grid is empty");
  return values;
}

SweepReport sweep(const Graph& g, const EdgeScores& scores, const std::vector<double>& deltas,
                  const CommunitySet* truth) {
  if (deltas.empty()) throw UsageError("sweep grid is empty");
  if (!std::is_sorted(deltas.begin(), deltas.end())) {
    throw UsageError("sweep deltas must be ascending");
  }
  const double n = static_cast<double>(g.node_count());
  const double m = static_cast<double>(g.edge_count());

  SweepReport report;
  report.kind = scores.kind;
  report.points.reserve(deltas.size());
  for (double delta : deltas) {
    const auto mask = kept_edge_mask(scores, delta);
    const Partition p = connected_components(g, mask);
    const std::uint64_t kept = tbb::parallel_reduce(
        tbb::blocked_range<std::size_t>(0, mask.size()), std::uint64_t{0},
        [&](const tbb::blocked_range<std::size_t>& r, std::uint64_t acc) {
          for (std::size_t e = r.begin(); e != r.end(); ++e) acc += mask[e];
          return acc;
        },
        std::plus<>());

    SweepPoint point;
    point.delta = delta;
    point.norm_cc = n > 0 ? static_cast<double>(p.community_count) / n : 0.0;
    point.norm_edges = m > 0 ? static_cast<double>(kept) / m : 0.0;
    point.norm_largest_cc = n > 0 ? static_cast<double>(largest_community_size(p)) / n : 0.0;
    point.modularity = modularity(g, p).value_or(0.0);
    if (truth != nullptr) point.f1 = evaluate(p, *truth).f1;
    report.points.push_back(point);
  }
  return report;
}

SweepReport sweep(const Graph& g, SimilarityKind kind, const SweepGrid& grid,
                  const CommunitySet* truth, std::size_t betweenness_node_limit) {
  const auto deltas = grid_values(grid);
  return sweep(g, compute_scores(g, kind, betweenness_node_limit), deltas, truth);
}

double select_threshold(const SweepReport& report, SelectionRule rule, double jump_factor) {
  if (report.points.size() < 2) throw UsageError("threshold selection needs at least two points");
  if (rule == SelectionRule::kLargestCcJump) {
    if (auto delta = largest_cc_jump_delta(report, jump_factor)) return *delta;
  }
  return max_modularity_delta(report);
}

void apply_selection(SweepReport& report, SelectionRule rule, double jump_factor) {
  if (report.points.size() < 2) throw UsageError("threshold selection needs at least two points");
  if (rule == SelectionRule::kLargestCcJump) {
    if (auto delta = largest_cc_jump_delta(report, jump_factor)) {
      report.selected_delta = *delta;
      report.selection_rule = SelectionRule::kLargestCcJump;
      return;
    }
  }
  report.selected_delta = max_modularity_delta(report);
  report.selection_rule = SelectionRule::kMaxModularity;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  const bool with_f1 = !report.points.empty() && report.points.front().f1.has_value();
  out << "delta,norm_cc,norm_edges,norm_largest_cc,modularity";
  if (with_f1) out << ",f1";
  out << '\n';
  for (const SweepPoint& p : report.points) {
    out << format_real(p.delta) << ',' << format_real(p.norm_cc) << ','
        << format_real(p.norm_edges) << ',' << format_real(p.norm_largest_cc) << ','
        << format_real(p.modularity);
    if (with_f1) out << ',' << format_real(p.f1.value_or(0.0));
    out << '\n';
  }
  if (report.selected_delta && report.selection_rule) {
    out << "# selected=" << format_real(*report.selected_delta)
        << " rule=" << to_string(*report.selection_rule) << '\n';
  }
}

}  // namespace motifclust
