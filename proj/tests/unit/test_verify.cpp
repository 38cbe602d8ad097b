#include <gtest/gtest.h>

#include "json.hpp"

#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph_io.hpp"
#include "itg/verify.hpp"

using namespace itg;

namespace {

Outcome outcome(TheoremId id, const Graph& g, long long k = 0, VerifyParams params = {}) {
  return check(id, g, k, params).outcome;
}

Corpus corpus_of(std::vector<Graph> graphs) { return Corpus{"test", std::move(graphs)}; }

}  // namespace

TEST(TheoremIds, ParseAndPrint) {
  const auto ids = all_theorem_ids();
  EXPECT_EQ(ids.size(), 19u);
  for (TheoremId id : ids) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_EQ(parse_theorem_id("t2_1"), TheoremId::T2_1);
  EXPECT_EQ(parse_theorem_id("eq_factorizations"), TheoremId::EQ_FACTORIZATIONS);
  EXPECT_THROW(parse_theorem_id("T9_9"), PreconditionError);
  EXPECT_EQ(parse_reading("witnessed"), Reading::kWitnessed);
  EXPECT_EQ(to_string(Reading::kAnyDiameterPath), "any-diameter-path");
  EXPECT_THROW(parse_reading("loose"), PreconditionError);
}

TEST(TheoremIds, DefaultKs) {
  EXPECT_EQ(default_ks(TheoremId::T2_1), (std::vector<long long>{2, 3, 4, 5}));
  EXPECT_EQ(default_ks(TheoremId::L2_4), (std::vector<long long>{2, 3, 4}));
  EXPECT_EQ(default_ks(TheoremId::T2_6), (std::vector<long long>{7, 8}));
  EXPECT_EQ(default_ks(TheoremId::T2_7), (std::vector<long long>{4, 5}));
  EXPECT_EQ(default_ks(TheoremId::T2_8), (std::vector<long long>{5, 6}));
  EXPECT_EQ(default_ks(TheoremId::T2_9), (std::vector<long long>{3, 4}));
  EXPECT_TRUE(default_ks(TheoremId::L2_1).empty());
}

TEST(Checkers, Trichotomy) {
  EXPECT_EQ(outcome(TheoremId::L2_1, build_complete(2)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::L2_1, build_cycle(5)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::L2_1, Graph::from_edges(4, {{0, 1}, {2, 3}})), Outcome::kSkip);
}

TEST(Checkers, DiameterAtMostK) {
  EXPECT_EQ(outcome(TheoremId::T2_1, build_path(6), 3), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_2, build_path(6), 3), Outcome::kPass);
  for (long long k = 2; k <= 5; ++k) EXPECT_EQ(outcome(TheoremId::T2_1, build_complete(5), k), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_1, build_path(6), 1), Outcome::kSkip);
}

// A graph on which the literal pattern clause over-fires: F2^3 induced with
// its two end edges close together.
TEST(Checkers, LiteralAndWitnessedReadingsDiffer) {
  const Graph g = parse_graph6("FE_jw");
  EXPECT_EQ(outcome(TheoremId::T2_1, g, 3), Outcome::kFail);
  VerifyParams witnessed;
  witnessed.reading = Reading::kWitnessed;
  EXPECT_EQ(outcome(TheoremId::T2_1, g, 3, witnessed), Outcome::kPass);
}

TEST(Checkers, SmallDiameters) {
  EXPECT_EQ(outcome(TheoremId::T2_3, build_complete(2)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_3, build_path(3)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_5, build_star(6)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_5, build_complete(5)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_5, build_cycle(4)), Outcome::kSkip);
  EXPECT_EQ(outcome(TheoremId::L2_3, build_cycle(4)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::L2_3, build_cycle(5)), Outcome::kPass);
}

TEST(Checkers, IteratedTotal) {
  EXPECT_EQ(outcome(TheoremId::T2_6, build_path(10), 7), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_6, build_complete(4), 7), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_6, build_path(10), 6), Outcome::kSkip);
  EXPECT_EQ(outcome(TheoremId::T2_7, build_path(4), 3), Outcome::kSkip);
  // C5 contains F1^2 = P4 induced, yet diam T^2(C5) = 3 is not > 4 - 1.
  EXPECT_EQ(outcome(TheoremId::T2_7, build_cycle(5), 4), Outcome::kFail);
  VerifyParams geodesic;
  geodesic.reading = Reading::kGeodesic;
  EXPECT_EQ(outcome(TheoremId::T2_7, build_cycle(5), 4, geodesic), Outcome::kPass);
}

TEST(Checkers, IteratedLine) {
  EXPECT_EQ(outcome(TheoremId::L2_4, build_path(7), 3), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::L2_4, build_path(2), 3), Outcome::kSkip);
  EXPECT_EQ(outcome(TheoremId::T2_9, build_f5(4), 4), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_8, build_path(8), 5), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T2_9, build_path(8), 2), Outcome::kSkip);
}

TEST(Checkers, RegularStructure) {
  EXPECT_EQ(outcome(TheoremId::T3_1, build_complete(4), 1), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T3_1, build_cycle(5), 2), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T3_1, build_petersen(), 1), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T3_1, build_path(4), 1), Outcome::kSkip);
}

TEST(Checkers, Spectral) {
  EXPECT_EQ(outcome(TheoremId::L3_1, build_petersen()), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::L3_1, build_complete(2)), Outcome::kSkip);
  EXPECT_EQ(outcome(TheoremId::T3_2, build_complete(2)), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T3_2, build_cube()), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::C3_2, build_complete(4), 1), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::C3_3, build_complete(2), 1), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T1_1, build_complete(4), 0), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::T1_1, build_cycle(5), 0), Outcome::kPass);
  EXPECT_EQ(outcome(TheoremId::EQ_FACTORIZATIONS, build_lollipop(8, 4)), Outcome::kPass);
  EXPECT_THROW(check(TheoremId::T3_3, build_petersen(), 1, {}), PreconditionError);
}

TEST(Checkers, ResourceCapBecomesFlaggedSkip) {
  VerifyParams tiny;
  tiny.max_vertices = 5;
  const CheckResult r = check(TheoremId::T3_1, build_petersen(), 1, tiny);
  EXPECT_EQ(r.outcome, Outcome::kSkip);
  EXPECT_TRUE(r.flag.has_value());
}

TEST(RunCorpus, DeterministicAcrossThreadCounts) {
  const Corpus corpus = load_corpus("gen:1..6");
  VerifyParams one;
  one.threads = 1;
  VerifyParams four;
  four.threads = 4;
  for (TheoremId id : {TheoremId::T2_1, TheoremId::L2_4, TheoremId::T2_7}) {
    const auto a = run_corpus(id, corpus, one);
    const auto b = run_corpus(id, corpus, four);
    ASSERT_EQ(a.checked, b.checked);
    ASSERT_EQ(a.skipped, b.skipped);
    ASSERT_EQ(a.failures.size(), b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
      EXPECT_EQ(a.failures[i].graph6, b.failures[i].graph6);
      EXPECT_EQ(a.failures[i].params, b.failures[i].params);
      EXPECT_EQ(a.failures[i].detail, b.failures[i].detail);
    }
  }
}

TEST(RunCorpus, CountsAndJson) {
  const auto report = run_corpus(TheoremId::T2_3, load_corpus("gen:1..5"));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.graphs, 31u);
  EXPECT_EQ(report.checked + report.skipped, 31u);
  const auto j = nlohmann::json::parse(report_to_json(report));
  EXPECT_EQ(j["theorem"], "T2_3");
  EXPECT_EQ(j["corpus"], "gen:1..5");
  EXPECT_EQ(j["failures"].size(), 0u);
  for (const char* key : {"reading", "graphs", "checked", "skipped", "flags", "elapsed_ms"}) EXPECT_TRUE(j.contains(key));

  const auto ks = run_corpus(TheoremId::L2_4, load_corpus("gen:4"));
  EXPECT_EQ(ks.checked + ks.skipped, 6u * 3u);
}

TEST(RunCorpus, FailuresCarryReproduction) {
  const auto report = run_corpus(TheoremId::T2_7, corpus_of({build_cycle(5)}));
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failures[0].graph6, to_graph6(build_cycle(5)));
  EXPECT_EQ(report.failures[0].params, "k=4 r=1");
  EXPECT_FALSE(report.failures[0].detail.empty());
}

TEST(RunCorpus, CospectralPairs) {
  const auto report = run_corpus(TheoremId::T3_3, corpus_of({build_shrikhande(), build_rook(4)}), VerifyParams{{1}});
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.checked, 1u);
  EXPECT_EQ(report.flags.size(), 1u);
  EXPECT_THROW(run_corpus(TheoremId::T2_3, corpus_of({})), PreconditionError);
}
