#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itg/corpus.hpp"
#include "itg/graph.hpp"
#include "itg/transforms.hpp"

namespace itg {

/// One checker per statement.
enum class TheoremId {
  L2_1,   // diam T(G) trichotomy
  T2_1,   // diam T(G) <= k characterization
  T2_2,   // diam T(G) > k characterization
  T2_3,   // diam T(G) = 1 iff G = K2
  L2_3,   // diam L(G) = diam G = 2 forces K4-e, Lol43, C4 or C5
  T2_5,   // diam T(G) = 2 iff complete or star
  T2_6,   // iterated total, necessary condition
  T2_7,   // iterated total, sufficient condition
  L2_4,   // diam L(G) > k characterization
  T2_8,   // iterated line, necessary condition
  T2_9,   // iterated line, sufficient condition
  T3_1,   // order/degree of regular iterates
  L3_1,   // adjacency and Q spectra of T(G) for regular G
  T3_2,   // IE(T(G)) bounds
  C3_2,   // IE(T^{k+1}(G)) bounds from n_k, r_k
  C3_3,   // IE(T^k(G)) bounds from consecutive iterates
  T3_3,   // cospectrality of total iterates
  T1_1,   // IE of iterated line graphs
  EQ_FACTORIZATIONS,
};

std::string_view to_string(TheoremId id);
/// Accepts the enumerator names ("T2_1", "EQ_FACTORIZATIONS"), case-insensitive.
TheoremId parse_theorem_id(std::string_view text);
std::vector<TheoremId> all_theorem_ids();

/// Alternative readings of ambiguous statements. kLiteral is the default for
/// every checker; the others only change the checkers they name.
enum class Reading {
  kLiteral,
  /// T2_1, T2_2, L2_4: an F-pattern only counts when its two end edges are
  /// at distance >= k in G.
  kWitnessed,
  /// T2_7: the hypothesis "F1^{k-2r} induced" is replaced by
  /// "F1^{k-2r} is a shortest path", i.e. diam(G) >= k - 2r + 1.
  kGeodesic,
  /// L2_1, T2_1, T2_2, L2_3, T2_5: lollipop/C5 diameter subgraphs use any
  /// embedding containing a diameter path instead of the anchored form.
  kAnyDiameterPath,
};

std::string_view to_string(Reading reading);
Reading parse_reading(std::string_view text);

struct VerifyParams {
  /// Empty: the checker's default parameter set.
  std::vector<long long> ks;
  long long r = 1;
  Reading reading = Reading::kLiteral;
  std::size_t max_vertices = kDefaultMaxVertices;
  /// 0: hardware concurrency.
  unsigned threads = 0;
};

/// Default k values per checker (empty for checkers without k).
std::vector<long long> default_ks(TheoremId id);

enum class Outcome { kPass, kFail, kSkip };

struct CheckResult {
  Outcome outcome = Outcome::kSkip;
  std::string detail;
  /// Non-failure diagnostic, reported in the flags list.
  std::optional<std::string> flag;
};

/// Evaluates one statement on one graph. `k` is ignored by checkers without
/// a k parameter. T3_3 compares pairs and is only available via run_corpus.
CheckResult check(TheoremId id, const Graph& g, long long k, const VerifyParams& params);

struct Finding {
  std::string graph6;
  std::string params;
  std::string detail;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::L2_1;
  std::string corpus;
  Reading reading = Reading::kLiteral;
  std::size_t graphs = 0;
  /// Evaluated (graph, parameter) cases; for T3_3, (pair, k) cases.
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Finding> failures;
  std::vector<Finding> flags;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Runs a checker over every corpus graph and every k. The report lists
/// failures and flags in corpus order, then k order, independent of the
/// number of worker threads.
VerificationReport run_corpus(TheoremId id, const Corpus& corpus, const VerifyParams& params = {});

/// JSON: {theorem, corpus, reading, graphs, checked, skipped, failures, flags,
/// elapsed_ms}.
std::string report_to_json(const VerificationReport& report, int indent = 2);

/// Induced copy of `pattern` (an F1/F2/F3 spine on k+3 vertices numbered
/// 0..k+2) whose end edges {0,1} and {k+1,k+2} lie at distance >= k in g.
bool has_witnessed_pattern(const Graph& g, const DistanceTable& dist, const Graph& pattern, long long k);

}  // namespace itg
