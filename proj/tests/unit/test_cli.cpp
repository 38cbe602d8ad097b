#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#include "itg/charpoly.hpp"
#include "itg/families.hpp"
#include "itg/graph_io.hpp"
#include "itg/spectral.hpp"
#include "itg/transforms.hpp"
#include "itg/verify.hpp"

using namespace itg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(ITG_SOURCE_DIR) + "/data/cospectral/" + name; }

}  // namespace

TEST(Cli, FormatReal) {
  EXPECT_EQ(cli::format_real(4.0), "4.0");
  EXPECT_EQ(cli::format_real(-0.0), "0.0");
  EXPECT_EQ(cli::format_real(11.656854249492380), "11.65685425");
  EXPECT_EQ(cli::format_real(-2.0), "-2.0");
  EXPECT_EQ(cli::format_real(0.5), "0.5");
}

TEST(Cli, Diameter) {
  const auto r = run({"diameter", "--family", "lol:8,4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, Energy) {
  const auto r = run({"energy", "--family", "k:3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "4.0\n");
  EXPECT_EQ(run({"energy", "--family", "petersen"}).out, cli::format_real(incidence_energy(build_petersen())) + "\n");
}

TEST(Cli, TransformMatchesModule) {
  const auto r = run({"transform", "--family", "c:5", "--op", "total", "--k", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, to_graph6(iterate(build_cycle(5), Operator::kTotal, 2)) + "\n");
  const auto e = run({"transform", "--family", "p:4", "--op", "line", "--format", "edges"});
  EXPECT_EQ(e.out, to_edge_list(line_graph(build_path(4)).graph));
}

TEST(Cli, TransformResourceGuard) {
  const auto r = run({"transform", "--family", "k:4", "--op", "total", "--k", "5"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("91000"), std::string::npos);
}

TEST(Cli, SpectrumMatchesModule) {
  const auto exact = run({"spectrum", "--family", "k:3", "--exact"});
  EXPECT_EQ(exact.out, char_poly(adjacency_matrix(build_complete(3))).to_string() + "\n");
  const auto q = run({"spectrum", "--family", "k:3", "--matrix", "q"});
  EXPECT_EQ(q.out, "4.0 1.0 1.0\n");
  const auto a = run({"spectrum", "--family", "c:4"});
  EXPECT_EQ(a.out, "2.0 0.0 0.0 -2.0\n");
}

TEST(Cli, Bounds) {
  const auto formula = run({"bounds", "--n", "2", "--r", "1"});
  EXPECT_EQ(formula.code, cli::kExitOk);
  EXPECT_EQ(formula.out, "lower 4.0\nupper 5.0\n");
  const auto k3 = run({"bounds", "--family", "k:3"});
  EXPECT_EQ(k3.code, cli::kExitOk);
  const auto b = ie_total_bounds(3, 2);
  EXPECT_EQ(k3.out, "lower " + cli::format_real(b.lower) + " ie " +
                        cli::format_real(incidence_energy(total_graph(build_complete(3)).graph)) + " upper " +
                        cli::format_real(b.upper) + " ok\n");
  EXPECT_EQ(run({"bounds", "--op", "line", "--n", "2", "--r", "1"}).code, cli::kExitError);
  EXPECT_EQ(run({"bounds", "--family", "p:3"}).code, cli::kExitError);
}

TEST(Cli, Contains) {
  const auto found = run({"contains", "--family", "c:5", "--pattern", "p:4", "--induced"});
  EXPECT_EQ(found.code, cli::kExitOk);
  EXPECT_EQ(found.out.rfind("found", 0), 0u);
  const auto missing = run({"contains", "--family", "k:4", "--pattern", "p:3", "--induced"});
  EXPECT_EQ(missing.code, cli::kExitNegative);
  EXPECT_EQ(missing.out, "not found\n");
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run({"verify", "--theorem", "T2_3", "--corpus", "gen:1..5"});
  EXPECT_EQ(ok.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  const auto direct = run_corpus(TheoremId::T2_3, load_corpus("gen:1..5"));
  EXPECT_EQ(j["checked"], direct.checked);
  EXPECT_EQ(j["failures"].size(), 0u);

  const auto bad = run({"verify", "--theorem", "T2_7", "--k", "4", "--corpus", "family:c:5"});
  EXPECT_EQ(bad.code, cli::kExitNegative);
  EXPECT_EQ(run({"verify", "--theorem", "T9_9"}).code, cli::kExitError);
  EXPECT_EQ(run({"verify"}).code, cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
}

TEST(Cli, Cospectral) {
  const auto r = run({"cospectral", "--a", data_file("shrikhande.g6"), "--b", data_file("rook44.g6"), "--op", "total",
                      "--k", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cospectral"], true);
  EXPECT_EQ(j["isomorphic"], false);
  EXPECT_EQ(j["order_a"], 64);
}

TEST(Cli, Family) {
  EXPECT_EQ(run({"family", "petersen"}).out, to_graph6(build_petersen()) + "\n");
  EXPECT_EQ(run({"family", "nonsense:3"}).code, cli::kExitError);
}
