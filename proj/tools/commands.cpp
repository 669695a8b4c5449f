#include "commands.hpp"

#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifclust/cluster.hpp"
#include "motifclust/diagnostics.hpp"
#include "motifclust/error.hpp"
#include "motifclust/generators.hpp"
#include "motifclust/io.hpp"
#include "motifclust/metrics.hpp"
#include "motifclust/parallel.hpp"
#include "motifclust/scores.hpp"
#include "motifclust/sweep.hpp"

namespace motifclust::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::optional<std::size_t> threads;
  std::uint64_t seed = 1;
};

struct ClusterOptions {
  std::string input;
  std::string output = "communities.txt";
  std::string sim = "tw";
  double delta = 0.0;
  std::string singletons = "keep";
  std::string scores_out;
  std::size_t node_limit = 20000;
};

struct SweepOptions {
  std::string input;
  std::string output = "-";
  std::string sim = "tw";
  std::optional<double> start, end, step;
  std::string truth;
  std::size_t min_size = 3;
  std::string rule = "jump";
  double jump_factor = kDefaultJumpFactor;
  bool auto_select = false;
  std::size_t node_limit = 20000;
};

struct EvalOptions {
  std::string input;
  std::string partition;
  std::string truth;
  std::string output = "-";
  std::size_t min_size = 3;
  std::string singletons = "keep";
  bool csv = false;
};

struct StatsOptions {
  std::string input;
  std::string truth;
  std::string output = "-";
  std::size_t min_size = 3;
  std::vector<std::string> sims{"tw", "tectonic", "k3"};
  std::size_t bins = 10;
  std::size_t node_limit = 20000;
};

struct SbmOptions {
  SbmParams params;
  std::string output = "-";
};

struct RmatOptions {
  unsigned scale = 10;
  std::optional<std::uint64_t> edges;
  double edge_factor = 5.0;
  std::vector<double> a{0.45, 0.15, 0.15, 0.25};
  std::string output = "-";
};

// Output sink: "-" means the command's stdout stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open " + path + " for writing");
      stream_ = file_.get();
    }
    path_ = path;
  }
  std::ostream& operator*() { return *stream_; }
  void close() {
    stream_->flush();
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed writing " + path_);
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

long peak_rss_kb() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
  return usage.ru_maxrss;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(); }

void warn_unknown(std::ostream& err, const char* what, std::size_t count) {
  if (count > 0) {
    err << "warning: " << count << " " << what
        << " label(s) not in the edge list were dropped\n";
  }
}

bool keep_singletons(const std::string& flag) { return flag == "keep"; }

SweepGrid default_grid(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::kTW: return {-30.0, 0.0, 2.0};
    case SimilarityKind::kTectonic: return {0.0, 0.3, 0.02};
    case SimilarityKind::kK3: return {0.0, 15.0, 1.0};
    default: throw UsageError(std::string("no default grid for --sim ") +
                              std::string(to_string(kind)) + "; pass --start, --end and --step");
  }
}

int cmd_cluster(const ClusterOptions& o, std::ostream& out) {
  const SimilarityKind kind = parse_similarity_kind(o.sim);
  LoadedGraph loaded = load_edge_list(o.input);
  const Graph& g = loaded.graph;

  const auto start = std::chrono::steady_clock::now();
  EdgeScores scores = compute_scores(g, kind, o.node_limit);
  Partition p = cluster(g, scores, o.delta);
  const double seconds = seconds_since(start);

  if (!o.scores_out.empty()) {
    Sink scores_sink(o.scores_out, out);
    write_scores_csv(*scores_sink, g, scores, loaded.map);
    scores_sink.close();
  }
  const auto members = partition_members(p, keep_singletons(o.singletons));
  Sink sink(o.output, out);
  write_communities(*sink, members, loaded.map);
  sink.close();

  Json status;
  status["n"] = g.node_count();
  status["m"] = g.edge_count();
  status["communities"] = p.community_count;
  status["singletons"] = singleton_count(p);
  status["written"] = members.size();
  status["largest"] = largest_community_size(p);
  status["seconds"] = seconds;
  status["peak_mem_kb"] = peak_rss_kb();
  if (o.output != "-") out << status.dump() << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepOptions& o, bool rule_given, std::ostream& out, std::ostream& err) {
  const SimilarityKind kind = parse_similarity_kind(o.sim);
  const SelectionRule rule = parse_selection_rule(o.rule);
  SweepGrid grid;
  if (o.start || o.end || o.step) {
    if (!(o.start && o.end && o.step)) {
      throw UsageError("--start, --end and --step must be given together");
    }
    grid = {*o.start, *o.end, *o.step};
  } else {
    grid = default_grid(kind);
  }
  const auto deltas = grid_values(grid);

  LoadedGraph loaded = load_edge_list(o.input);
  std::optional<LoadedCommunities> truth;
  if (!o.truth.empty()) {
    truth = load_communities(o.truth, loaded.map, o.min_size);
    warn_unknown(err, "groundtruth", truth->unknown_labels);
  }
  if (truth && truth->communities.empty()) {
    throw UsageError("no groundtruth community survives the size filter");
  }

  EdgeScores scores = compute_scores(loaded.graph, kind, o.node_limit);
  SweepReport report =
      sweep(loaded.graph, scores, deltas, truth ? &truth->communities : nullptr);
  if (o.auto_select || rule_given) apply_selection(report, rule, o.jump_factor);

  Sink sink(o.output, out);
  write_sweep_csv(*sink, report);
  sink.close();
  return kExitOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  LoadedGraph loaded = load_edge_list(o.input);
  LoadedCommunities truth = load_communities(o.truth, loaded.map, o.min_size);
  LoadedCommunities predicted = load_communities(o.partition, loaded.map, 1);
  warn_unknown(err, "groundtruth", truth.unknown_labels);
  warn_unknown(err, "partition", predicted.unknown_labels);

  std::vector<std::vector<NodeId>> clusters;
  std::size_t singletons = 0;
  for (const auto& c : predicted.communities.communities()) {
    if (c.size() == 1) {
      ++singletons;
      if (!keep_singletons(o.singletons)) continue;
    }
    clusters.push_back(c);
  }
  if (clusters.empty()) throw UsageError("no predicted cluster to evaluate");
  if (truth.communities.empty()) {
    throw UsageError("no groundtruth community survives the size filter");
  }

  EvalReport report = evaluate(clusters, truth.communities);
  Sink sink(o.output, out);
  if (o.csv) {
    *sink << "precision,recall,f1\n" << to_csv_line(report) << '\n';
  } else {
    Json j = Json::parse(to_json(report));
    j["predicted_clusters"] = predicted.communities.size();
    j["singleton_clusters"] = singletons;
    j["evaluated_clusters"] = clusters.size();
    j["truth_communities"] = truth.communities.size();
    j["truth_dropped_small"] = truth.dropped_small;
    j["truth_unknown_labels"] = truth.unknown_labels;
    j["predicted_unknown_labels"] = predicted.unknown_labels;
    *sink << j.dump() << '\n';
  }
  sink.close();
  return kExitOk;
}

int cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream& err) {
  if (o.bins == 0) throw UsageError("--bins must be at least 1");
  std::vector<SimilarityKind> kinds;
  for (const auto& s : o.sims) kinds.push_back(parse_similarity_kind(s));

  LoadedGraph loaded = load_edge_list(o.input);
  LoadedCommunities truth = load_communities(o.truth, loaded.map, o.min_size);
  warn_unknown(err, "groundtruth", truth.unknown_labels);
  if (truth.communities.empty()) {
    throw UsageError("no groundtruth community survives the size filter");
  }
  const Graph& g = loaded.graph;

  Json j;
  j["n"] = g.node_count();
  j["m"] = g.edge_count();
  j["truth_communities"] = truth.communities.size();
  j["truth_dropped_small"] = truth.dropped_small;
  j["truth_unknown_labels"] = truth.unknown_labels;

  const MotifCutFractions cut = motif_cut_fractions(g, truth.communities);
  j["motif_cut_fractions"] = {{"edges_cut", optional_number(cut.edges_cut)},
                              {"wedges_cut", optional_number(cut.wedges_cut)},
                              {"triangles_cut", optional_number(cut.triangles_cut)},
                              {"edges", cut.edges},
                              {"wedges", cut.wedges},
                              {"triangles", cut.triangles}};

  Json hist = Json::array();
  for (const DensityBin& b : density_histogram(g, truth.communities, o.bins)) {
    hist.push_back({{"lower", b.lower}, {"upper", b.upper}, {"count", b.count}});
  }
  j["density_histogram"] = std::move(hist);

  Json separation = Json::object();
  for (SimilarityKind kind : kinds) {
    EdgeScores scores = compute_scores(g, kind, o.node_limit);
    separation[std::string(to_string(kind))] =
        optional_number(score_separation(g, scores, truth.communities));
  }
  j["score_separation"] = std::move(separation);

  Sink sink(o.output, out);
  *sink << j.dump() << '\n';
  sink.close();
  return kExitOk;
}

int cmd_gen_sbm(const SbmOptions& o, std::ostream& out, std::ostream& err) {
  for (const auto& w : sbm_warnings(o.params)) err << "warning: " << w << '\n';
  Graph g = gen_sbm(o.params);
  Sink sink(o.output, out);
  write_edge_list(*sink, g);
  sink.close();
  return kExitOk;
}

int cmd_gen_rmat(const RmatOptions& o, std::uint64_t seed, std::ostream& out) {
  if (o.a.size() != 4) throw UsageError("--a needs four comma-separated probabilities");
  RmatParams params;
  params.scale = o.scale;
  params.edges = o.edges;
  params.edge_factor = o.edge_factor;
  params.a = {o.a[0], o.a[1], o.a[2], o.a[3]};
  params.seed = seed;
  Graph g = gen_rmat(params);
  Sink sink(o.output, out);
  write_edge_list(*sink, g);
  sink.close();
  return kExitOk;
}

void add_common(CLI::App* app, CommonOptions& common) {
  app->add_option("--threads", common.threads,
                  "Worker count (default: $MOTIFCLUST_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", common.seed, "Random seed")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motif-based community detection: score edges, threshold, report components"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(36);

  CommonOptions common;
  const std::vector<std::string> sim_names{"tw", "tectonic", "jaccard", "k3", "k4", "effres", "bc"};

  ClusterOptions cl;
  auto* cluster_cmd = app.add_subcommand("cluster", "Threshold edge scores and write components");
  cluster_cmd->add_option("--input", cl.input, "Edge list (plain or gzip)")->required();
  cluster_cmd->add_option("--output", cl.output, "Partition file, '-' for stdout")
      ->capture_default_str();
  cluster_cmd->add_option("--sim", cl.sim, "Similarity")
      ->check(CLI::IsMember(sim_names))
      ->capture_default_str();
  cluster_cmd->add_option("--delta", cl.delta, "Edges scoring below delta are removed")
      ->capture_default_str();
  cluster_cmd->add_option("--singletons", cl.singletons, "Write singleton communities")
      ->check(CLI::IsMember({"keep", "drop"}))
      ->capture_default_str();
  cluster_cmd->add_option("--scores-out", cl.scores_out, "Also write per-edge scores as CSV");
  cluster_cmd->add_option("--node-limit", cl.node_limit, "Node guard for --sim bc")
      ->capture_default_str();
  add_common(cluster_cmd, common);

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Cluster over a threshold grid");
  sweep_cmd->add_option("--input", sw.input, "Edge list (plain or gzip)")->required();
  sweep_cmd->add_option("--output", sw.output, "CSV report, '-' for stdout")
      ->capture_default_str();
  sweep_cmd->add_option("--sim", sw.sim, "Similarity")
      ->check(CLI::IsMember(sim_names))
      ->capture_default_str();
  sweep_cmd->add_option("--start", sw.start,
                        "First delta (default grid: tw -30,0,2; tectonic 0,0.3,0.02; k3 0,15,1)");
  sweep_cmd->add_option("--end", sw.end, "Grid end (exclusive)");
  sweep_cmd->add_option("--step", sw.step, "Grid step");
  sweep_cmd->add_option("--truth", sw.truth, "Groundtruth communities; adds an f1 column");
  sweep_cmd->add_option("--min-size", sw.min_size, "Drop groundtruth communities below this size")
      ->capture_default_str();
  auto* rule_opt = sweep_cmd->add_option("--rule", sw.rule, "Threshold selection rule")
                       ->check(CLI::IsMember({"jump", "modularity"}))
                       ->capture_default_str();
  sweep_cmd->add_option("--jump-factor", sw.jump_factor,
                        "Minimum normalized largest-component rise for the jump rule")
      ->capture_default_str();
  sweep_cmd->add_flag("--auto-select", sw.auto_select, "Append the selected threshold");
  sweep_cmd->add_option("--node-limit", sw.node_limit, "Node guard for --sim bc")
      ->capture_default_str();
  add_common(sweep_cmd, common);

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score a partition against groundtruth");
  eval_cmd->add_option("--input", ev.input, "Edge list the labels refer to")->required();
  eval_cmd->add_option("--partition", ev.partition, "Predicted communities, one per line")
      ->required();
  eval_cmd->add_option("--truth", ev.truth, "Groundtruth communities")->required();
  eval_cmd->add_option("--output", ev.output, "Report, '-' for stdout")->capture_default_str();
  eval_cmd->add_option("--min-size", ev.min_size, "Drop groundtruth communities below this size")
      ->capture_default_str();
  eval_cmd->add_option("--singletons", ev.singletons, "Evaluate singleton clusters")
      ->check(CLI::IsMember({"keep", "drop"}))
      ->capture_default_str();
  eval_cmd->add_flag("--csv", ev.csv, "One-line CSV summary instead of JSON");
  add_common(eval_cmd, common);

  StatsOptions st;
  auto* stats_cmd = app.add_subcommand("stats", "Groundtruth motif and density diagnostics");
  stats_cmd->add_option("--input", st.input, "Edge list (plain or gzip)")->required();
  stats_cmd->add_option("--truth", st.truth, "Groundtruth communities")->required();
  stats_cmd->add_option("--output", st.output, "JSON report, '-' for stdout")
      ->capture_default_str();
  stats_cmd->add_option("--min-size", st.min_size, "Drop groundtruth communities below this size")
      ->capture_default_str();
  stats_cmd->add_option("--sim", st.sims, "Similarities for score separation")
      ->delimiter(',')
      ->check(CLI::IsMember(sim_names))
      ->capture_default_str();
  stats_cmd->add_option("--bins", st.bins, "Density histogram bins")->capture_default_str();
  stats_cmd->add_option("--node-limit", st.node_limit, "Node guard for --sim bc")
      ->capture_default_str();
  add_common(stats_cmd, common);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->require_subcommand(1);
  SbmOptions sbm;
  auto* sbm_cmd = gen_cmd->add_subcommand("sbm", "Two-block stochastic block model");
  sbm_cmd->add_option("--n", sbm.params.n, "Nodes per block")->capture_default_str();
  sbm_cmd->add_option("--p1", sbm.params.p1, "Edge probability inside block 1")
      ->capture_default_str();
  sbm_cmd->add_option("--p2", sbm.params.p2, "Edge probability inside block 2")
      ->capture_default_str();
  sbm_cmd->add_option("--q", sbm.params.q, "Edge probability across blocks")
      ->capture_default_str();
  sbm_cmd->add_option("--out,--output", sbm.output, "Edge list, '-' for stdout")
      ->capture_default_str();
  add_common(sbm_cmd, common);

  RmatOptions rm;
  auto* rmat_cmd = gen_cmd->add_subcommand("rmat", "R-MAT graph");
  rmat_cmd->add_option("--scale", rm.scale, "log2 of the node count")->capture_default_str();
  auto* edges_opt = rmat_cmd->add_option("--edges", rm.edges, "Edge draws");
  rmat_cmd->add_option("--edge-factor", rm.edge_factor, "Edge draws per node")
      ->capture_default_str()
      ->excludes(edges_opt);
  rmat_cmd->add_option("--a", rm.a, "Quadrant probabilities a11,a12,a21,a22")
      ->delimiter(',')
      ->expected(4)
      ->capture_default_str();
  rmat_cmd->add_option("--out,--output", rm.output, "Edge list, '-' for stdout")
      ->capture_default_str();
  add_common(rmat_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    WorkerPool pool(resolve_thread_count(common.threads));
    return pool.run([&]() -> int {
      if (*cluster_cmd) return cmd_cluster(cl, out);
      if (*sweep_cmd) return cmd_sweep(sw, rule_opt->count() > 0, out, err);
      if (*eval_cmd) return cmd_eval(ev, out, err);
      if (*stats_cmd) return cmd_stats(st, out, err);
      if (*sbm_cmd) {
        sbm.params.seed = common.seed;
        return cmd_gen_sbm(sbm, out, err);
      }
      if (*rmat_cmd) return cmd_gen_rmat(rm, common.seed, out);
      throw UsageError("no command given");
    });
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataFormat;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace motifclust::cli
