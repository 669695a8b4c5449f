#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "test_util.hpp"

namespace motifclust {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "motifclust");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = testing::temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

const char* kBridge = "10 11\n11 12\n10 12\n13 14\n14 15\n13 15\n12 13\n";

TEST(Cli, ClusterToStdout) {
  auto input = write_file("bridge.txt", kBridge);
  auto r = run_cli({"cluster", "--input", input, "--output", "-", "--sim", "tw", "--delta", "0"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "10 11 12\n13 14 15\n");
}

TEST(Cli, ClusterToFileReportsStatus) {
  auto input = write_file("bridge2.txt", kBridge);
  auto output = testing::temp_path("bridge2.cmty");
  auto scores = testing::temp_path("bridge2.csv");
  auto r = run_cli({"cluster", "--input", input, "--output", output, "--scores-out", scores,
                    "--threads", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(slurp(output), "10 11 12\n13 14 15\n");
  EXPECT_NE(slurp(scores).find("12,13,-4"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["m"], 7);
  EXPECT_EQ(j["communities"], 2);
}

TEST(Cli, SingletonsDropped) {
  auto input = write_file("path.txt", "1 2\n2 3\n");
  auto keep = run_cli({"cluster", "--input", input, "--output", "-", "--delta", "0"});
  EXPECT_EQ(keep.out, "1\n2\n3\n");
  auto drop = run_cli({"cluster", "--input", input, "--output", "-", "--delta", "0",
                       "--singletons", "drop"});
  EXPECT_EQ(drop.out, "");
}

TEST(Cli, SweepWithTruthAndSelection) {
  auto input = write_file("bridge3.txt", kBridge);
  auto truth = write_file("bridge3.truth", "10 11 12\n13 14 15\n");
  auto r = run_cli({"sweep", "--input", input, "--truth", truth, "--start", "-5", "--end", "2",
                    "--step", "1", "--auto-select"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "delta,norm_cc,norm_edges,norm_largest_cc,modularity,f1");
  EXPECT_NE(r.out.find("# selected=-3 rule=jump"), std::string::npos);
}

TEST(Cli, SweepDefaultGrid) {
  auto input = write_file("bridge4.txt", kBridge);
  auto r = run_cli({"sweep", "--input", input, "--sim", "k3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
  auto partial = run_cli({"sweep", "--input", input, "--start", "0"});
  EXPECT_EQ(partial.code, cli::kExitUsage);
}

TEST(Cli, EvalJsonAndCsv) {
  auto input = write_file("sq.txt", "0 1\n1 2\n2 3\n3 0\n");
  auto truth = write_file("sq.truth", "0 1 9\n2 3\n");
  auto pred = write_file("sq.pred", "0 1 2 3\n");
  auto r = run_cli({"eval", "--input", input, "--partition", pred, "--truth", truth,
                    "--min-size", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["precision"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["recall"].get<double>(), 1.0);
  EXPECT_EQ(j["truth_unknown_labels"], 1);
  EXPECT_NE(r.err.find("1 groundtruth label(s)"), std::string::npos);
  auto csv = run_cli({"eval", "--input", input, "--partition", pred, "--truth", truth,
                      "--min-size", "2", "--csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "precision,recall,f1");
}

TEST(Cli, Stats) {
  auto input = write_file("bridge5.txt", kBridge);
  auto truth = write_file("bridge5.truth", "10 11 12\n13 14 15\n");
  auto r = run_cli({"stats", "--input", input, "--truth", truth, "--sim", "tw,k3", "--bins", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["motif_cut_fractions"]["triangles_cut"].get<double>(), 0.0);
  EXPECT_EQ(j["density_histogram"].size(), 2u);
  EXPECT_GT(j["score_separation"]["tw"].get<double>(), 0.0);
}

TEST(Cli, GenSbmIsSeeded) {
  auto a = run_cli({"gen", "sbm", "--n", "30", "--seed", "5"});
  auto b = run_cli({"gen", "sbm", "--n", "30", "--seed", "5", "--threads", "3"});
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  auto warn = run_cli({"gen", "sbm", "--n", "5", "--q", "0.9"});
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST(Cli, GenRmatToFileThenCluster) {
  auto path = testing::temp_path("rmat.txt");
  auto g = run_cli({"gen", "rmat", "--scale", "8", "--edges", "1000", "--out", path});
  ASSERT_EQ(g.code, cli::kExitOk) << g.err;
  auto c = run_cli({"cluster", "--input", path, "--output", "-", "--sim", "k3", "--delta", "1"});
  EXPECT_EQ(c.code, cli::kExitOk);
  auto bad = run_cli({"gen", "rmat", "--a", "0.5,0.5,0.5,0.5"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"cluster", "--help"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"cluster", "--input", "x", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"cluster", "--input", "x", "--sim", "cosine"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"cluster", "--input", testing::temp_path("missing.txt")}).code,
            cli::kExitIo);
  auto bad = write_file("bad.txt", "1 2\n2 three\n");
  auto r = run_cli({"cluster", "--input", bad, "--output", "-"});
  EXPECT_EQ(r.code, cli::kExitDataFormat);
  EXPECT_NE(r.err.find(":2:"), std::string::npos);
}

TEST(Cli, BetweennessGuard) {
  auto input = write_file("bc.txt", kBridge);
  auto ok = run_cli({"cluster", "--input", input, "--output", "-", "--sim", "bc", "--delta", "-5"});
  EXPECT_EQ(ok.code, cli::kExitOk);
  EXPECT_EQ(ok.out, "10 11 12\n13 14 15\n");
  auto guarded = run_cli({"cluster", "--input", input, "--sim", "bc", "--node-limit", "3"});
  EXPECT_EQ(guarded.code, cli::kExitUsage);
}

}  // namespace
}  // namespace motifclust
