#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "spantree/errors.hpp"
#include "spantree/graph_spec.hpp"
#include "spantree/polyring.hpp"

using namespace spantree;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(GraphSpec, Families) {
  EXPECT_EQ(parse_spec("K4").family(), GraphFamily::Complete);
  const Graph prod = parse_spec("K3xK4");
  EXPECT_EQ(prod.family(), GraphFamily::Product);
  EXPECT_EQ(prod.n_vertices(), 12u);
  EXPECT_EQ(parse_spec("K3xK4xK2").n_directions(), 3u);
  const Graph q2 = parse_spec("Q2");
  EXPECT_EQ(q2.family(), GraphFamily::Hypercube);
  EXPECT_EQ(q2.n_vertices(), 4u);
  EXPECT_EQ(q2.edge_count(), 4u);
  const Graph multi = parse_spec("K3(2)");
  EXPECT_EQ(multi.family(), GraphFamily::Multigraph);
  EXPECT_EQ(multi.edge_count(), 6u);
  const Graph star = parse_spec("T:3,1,1,1");
  EXPECT_EQ(star.family(), GraphFamily::Threshold);
  EXPECT_EQ(star.edge_count(), 3u);
}

TEST(GraphSpec, Errors) {
  EXPECT_THROW(parse_spec("T:2,2,1,1"), NotThresholdSequence);
  EXPECT_THROW(parse_spec("T:1,2"), NotThresholdSequence);
  for (const char* bad : {"", "K", "Kx", "K3x", "K3(2)xK2", "K3(", "Q", "Q0", "T:", "T:3,", "L4", "K4 "}) {
    EXPECT_THROW(parse_spec(bad), ParseError) << bad;
  }
  try {
    parse_spec("K3xL4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "K4"}).out, "16\n");
  EXPECT_EQ(run({"count", "Q3"}).out, "384\n");
  EXPECT_EQ(run({"count", "T:3,1,1,1"}).out, "1\n");
  EXPECT_EQ(run({"count", "Q3", "--brute"}).out, "384\n");
  EXPECT_EQ(run({"count", "T:1,1,0"}).out, "0\n");
}

TEST(Cli, EnumerateCayleyPrufer) {
  const Result r = run({"enumerate", "K3", "--stat", "degree"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(Polynomial::parse(r.out.substr(0, r.out.size() - 1)), Polynomial::parse("x1*x2^2*x3 + x1^2*x2*x3 + x1*x2*x3^2"));
  EXPECT_EQ(run({"enumerate", "K3", "--stat", "degree", "--brute"}).out, r.out);
}

TEST(Cli, EnumerateDefaultsPerFamily) {
  const Result prod = run({"enumerate", "K2xK2"});
  EXPECT_EQ(prod.out.rfind("direction: 2*q1^2*q2 + 2*q1*q2^2\ndecoupled: ", 0), 0u);
  EXPECT_EQ(run({"enumerate", "T:2,2,2"}).out, "x1^2*y2*y3 + x1*x2*y2*y3 + x1*x2*y3^2\n");
  EXPECT_EQ(run({"enumerate", "Q2", "--reduce", "1,1"}).out, run({"enumerate", "Q2", "--brute"}).out);
}

TEST(Cli, JsonRoundTrips) {
  const Result r = run({"enumerate", "K4", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const Polynomial p = Polynomial::from_json(j["enumerators"][0]["polynomial"]);
  EXPECT_EQ(p, Polynomial::parse("x1*x2*x3*x4") * Polynomial::parse("x1 + x2 + x3 + x4").pow(2));
  EXPECT_EQ(p.to_json(), j["enumerators"][0]["polynomial"]);
}

TEST(Cli, IdenticalInvocationsAreByteIdentical) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"verify", "threshold-nullvector", "--lambda", "3,3,2,2", "--json"},
           {"conjecture-scan", "--dims", "2,3", "--json"},
           {"verify", "divisibility", "--dims", "2,2"},
           {"enumerate", "K2xK3", "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, VerifyAndScan) {
  const Result cube = run({"verify", "cube", "--n", "3", "--brute"});
  EXPECT_EQ(cube.code, cli::kOk);
  EXPECT_EQ(cube.out, "Verified cube/n=3/brute-force\n");
  const Result scan = run({"conjecture-scan", "--dims", "2,3"});
  EXPECT_EQ(scan.code, cli::kOk);
  EXPECT_EQ(scan.out.rfind("Verified conjecture(2,3)", 0), 0u);
  const Result oracle = run({"verify", "oracle", "K2xK3", "--stat", "direction"});
  EXPECT_EQ(oracle.code, cli::kOk);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"count"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", "K9y"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", "T:2,2,1,1"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "K3", "--stat", "cube"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "K3", "--stat", "degree", "--weights", "generic"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "K6", "--brute", "--cap", "100"}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"count", "--help"}).code, cli::kOk);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "spantree_cli_out.txt";
  const Result r = run({"count", "K5", "--out", path});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "125");
  std::remove(path.c_str());
}
