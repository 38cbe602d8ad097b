#include "itg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "itg/charpoly.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph_io.hpp"
#include "itg/isomorphism.hpp"
#include "itg/pattern_search.hpp"
#include "itg/spectral.hpp"

namespace itg {

namespace {

constexpr double kEnergyTolerance = 1e-9;
constexpr double kSpectrumTolerance = 1e-8;
// Largest iterate whose characteristic polynomial T3_3 computes exactly.
constexpr std::size_t kExactSpectrumLimit = 64;

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::L2_1, "L2_1"}, {TheoremId::T2_1, "T2_1"}, {TheoremId::T2_2, "T2_2"},
    {TheoremId::T2_3, "T2_3"}, {TheoremId::L2_3, "L2_3"}, {TheoremId::T2_5, "T2_5"},
    {TheoremId::T2_6, "T2_6"}, {TheoremId::T2_7, "T2_7"}, {TheoremId::L2_4, "L2_4"},
    {TheoremId::T2_8, "T2_8"}, {TheoremId::T2_9, "T2_9"}, {TheoremId::T3_1, "T3_1"},
    {TheoremId::L3_1, "L3_1"}, {TheoremId::T3_2, "T3_2"}, {TheoremId::C3_2, "C3_2"},
    {TheoremId::C3_3, "C3_3"}, {TheoremId::T3_3, "T3_3"}, {TheoremId::T1_1, "T1_1"},
    {TheoremId::EQ_FACTORIZATIONS, "EQ_FACTORIZATIONS"},
};

constexpr std::pair<Reading, std::string_view> kReadingNames[] = {
    {Reading::kLiteral, "literal"},
    {Reading::kWitnessed, "witnessed"},
    {Reading::kGeodesic, "geodesic"},
    {Reading::kAnyDiameterPath, "any-diameter-path"},
};

std::string upper(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string dist_str(Distance d) { return d == kInfinity ? std::string("inf") : std::to_string(d); }

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

CheckResult pass(std::string detail = {}) { return {Outcome::kPass, std::move(detail), std::nullopt}; }
CheckResult fail(std::string detail) { return {Outcome::kFail, std::move(detail), std::nullopt}; }
CheckResult skip(std::string detail) { return {Outcome::kSkip, std::move(detail), std::nullopt}; }
CheckResult verdict(bool ok, std::string detail) { return ok ? pass(std::move(detail)) : fail(std::move(detail)); }

// Per-graph values shared by every k of one run.
class Context {
 public:
  Context(const Graph& g, const VerifyParams& params) : g_(g), params_(params) {}

  const Graph& graph() const { return g_; }
  const VerifyParams& params() const { return params_; }
  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }
  const DistanceTable& dist() {
    if (!dist_) dist_.emplace(g_);
    return *dist_;
  }
  Distance diam() { return g_.order() <= 1 ? 0 : dist().max(); }
  const Graph& total() {
    if (!total_) total_ = total_graph(g_).graph;
    return *total_;
  }
  const Graph& line() {
    if (!line_) line_ = line_graph(g_).graph;
    return *line_;
  }
  Distance diam_total() {
    if (!diam_total_) diam_total_ = diameter(total());
    return *diam_total_;
  }
  Distance diam_line() {
    if (!diam_line_) diam_line_ = diameter(line());
    return *diam_line_;
  }
  const Graph& iterate_of(Operator op, std::size_t k) {
    auto& cache = op == Operator::kTotal ? total_iterates_ : line_iterates_;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, iterate(g_, op, k, params_.max_vertices)).first;
    return it->second;
  }
  bool induced(const Graph& pattern) { return contains_induced(g_, pattern).has_value(); }
  LollipopMode lollipop_mode() const {
    return params_.reading == Reading::kAnyDiameterPath ? LollipopMode::kAnyDiameterPath : LollipopMode::kAnchored;
  }
  std::optional<std::size_t> regular_degree() {
    if (!regular_checked_) {
      regular_ = is_regular(g_);
      regular_checked_ = true;
    }
    return regular_;
  }

 private:
  const Graph& g_;
  const VerifyParams& params_;
  std::optional<bool> connected_;
  std::optional<DistanceTable> dist_;
  std::optional<Graph> total_, line_;
  std::optional<Distance> diam_total_, diam_line_;
  std::map<std::size_t, Graph> total_iterates_, line_iterates_;
  bool regular_checked_ = false;
  std::optional<std::size_t> regular_;
};

// F1^{k+1}, F2^k, F3^k in g: induced, or distance-witnessed.
struct PatternClause {
  bool f1 = false, f2 = false, f3 = false;
  bool any() const { return f1 || f2 || f3; }
  std::string describe(long long k) const {
    return "F1^" + std::to_string(k + 1) + "=" + yn(f1) + " F2^" + std::to_string(k) + "=" + yn(f2) + " F3^" +
           std::to_string(k) + "=" + yn(f3);
  }
};

PatternClause pattern_clause(Context& ctx, long long k) {
  PatternClause c;
  const bool witnessed = ctx.params().reading == Reading::kWitnessed;
  auto test = [&](const Graph& pattern) {
    return witnessed ? has_witnessed_pattern(ctx.graph(), ctx.dist(), pattern, k) : ctx.induced(pattern);
  };
  c.f1 = test(build_f1(k + 1));
  c.f2 = !c.f1 && test(build_f2(k));
  c.f3 = !c.f1 && !c.f2 && test(build_f3(k));
  return c;
}

CheckResult check_trichotomy(Context& ctx) {
  const Distance d = ctx.diam();
  const Distance dt = ctx.diam_total();
  const Distance dl = ctx.diam_line();
  bool lollipop = false;
  if (dt != d && dt != dl && dt == d + 1 && d >= 1) lollipop = has_any_lollipop_diameter_subgraph(ctx.graph(), ctx.lollipop_mode());
  const bool ok = dt == d || dt == dl || (dt == d + 1 && lollipop);
  return verdict(ok, "diam(G)=" + dist_str(d) + " diam(L)=" + dist_str(dl) + " diam(T)=" + dist_str(dt) +
                         " lollipop=" + yn(lollipop));
}

CheckResult check_diam_k(Context& ctx, long long k, bool greater_form) {
  if (k < 2) return skip("k < 2");
  const Distance d = ctx.diam();
  const Distance dt = ctx.diam_total();
  const PatternClause patterns = pattern_clause(ctx, k);
  const bool diameter_path = d == static_cast<Distance>(k + 1);
  bool lollipop = false;
  if (d == static_cast<Distance>(k)) lollipop = has_any_lollipop_diameter_subgraph(ctx.graph(), ctx.lollipop_mode());
  const bool conditions = patterns.any() || diameter_path || lollipop;
  const bool lhs = greater_form ? dt > static_cast<Distance>(k) : dt <= static_cast<Distance>(k);
  const bool rhs = greater_form ? conditions : !conditions;
  return verdict(lhs == rhs, "diam(T)=" + dist_str(dt) + " diam(G)=" + dist_str(d) + " " + patterns.describe(k) +
                                 " F1^k diameter path=" + yn(diameter_path) + " lollipop=" + yn(lollipop) +
                                 " lhs=" + yn(lhs) + " rhs=" + yn(rhs));
}

CheckResult check_diam_eq_1(Context& ctx) {
  const Graph& g = ctx.graph();
  const bool is_k2 = g.order() == 2 && g.size() == 1;
  const Distance dt = ctx.diam_total();
  return verdict((dt == 1) == is_k2, "diam(T)=" + dist_str(dt) + " G=K2:" + yn(is_k2));
}

struct SmallPatterns {
  bool k4e = false, lol43 = false, c4 = false, c5 = false;
  std::string describe() const {
    return std::string("K4-e=") + yn(k4e) + " Lol43=" + yn(lol43) + " C4=" + yn(c4) + " C5 diameter subgraph=" + yn(c5);
  }
};

SmallPatterns small_patterns(Context& ctx) {
  SmallPatterns s;
  s.k4e = ctx.induced(build_k4_minus_edge());
  s.lol43 = ctx.induced(build_lollipop(4, 3));
  s.c4 = ctx.induced(build_cycle(4));
  // C5 = Lol_{l+D+1, 2l+1} with l = 2 and D = 2.
  s.c5 = ctx.diam() == 2 && has_lollipop_diameter_subgraph(ctx.graph(), 2, ctx.lollipop_mode());
  return s;
}

CheckResult check_lemma_small(Context& ctx) {
  const Distance d = ctx.diam();
  const Distance dl = ctx.diam_line();
  if (!(d == 2 && dl == 2)) return pass("diam(G)=" + dist_str(d) + " diam(L)=" + dist_str(dl) + " (vacuous)");
  const SmallPatterns s = small_patterns(ctx);
  return verdict(s.k4e || s.lol43 || s.c4 || s.c5, s.describe());
}

CheckResult check_diam_eq_2(Context& ctx) {
  const Graph& g = ctx.graph();
  const std::size_t n = g.order();
  if (n <= 2) return skip("n <= 2");
  const SmallPatterns s = small_patterns(ctx);
  const bool hypothesis = !s.k4e && !s.lol43 && !s.c4 && !s.c5;
  const bool alternative = !(s.k4e && s.lol43 && s.c4) && !s.c5;
  const bool complete = g.size() == n * (n - 1) / 2;
  const bool star = isomorphic(g, build_star(static_cast<long long>(n)));
  const Distance dt = ctx.diam_total();
  const bool ok = (dt == 2) == (complete || star);
  const std::string detail = s.describe() + " diam(T)=" + dist_str(dt) + " complete=" + yn(complete) +
                             " star=" + yn(star);
  if (!hypothesis) {
    CheckResult r = skip(detail);
    if (alternative && !ok) r.flag = "fails under the weaker hypothesis reading: " + detail;
    return r;
  }
  return verdict(ok, detail);
}

CheckResult check_total_necessary(Context& ctx, long long k) {
  const long long r = ctx.params().r;
  if (r < 1 || k < 4 * r + 3) return skip("requires r >= 1 and k >= 4r+3");
  const long long len = k - 4 * r - 1;
  if (ctx.induced(build_f1(len))) return pass("F1^" + std::to_string(len) + " induced");
  const Distance d = diameter(ctx.iterate_of(Operator::kTotal, static_cast<std::size_t>(r + 1)));
  return verdict(!(d > static_cast<Distance>(k - r)),
                 "diam(T^" + std::to_string(r + 1) + ")=" + dist_str(d) + " F1^" + std::to_string(len) + " induced=no");
}

CheckResult check_total_sufficient(Context& ctx, long long k) {
  const long long r = ctx.params().r;
  if (r < 1 || k < 2 * r + 2) return skip("requires r >= 1 and k >= 2r+2");
  const long long len = k - 2 * r;
  bool hypothesis = false;
  if (ctx.params().reading == Reading::kGeodesic) {
    hypothesis = ctx.diam() != kInfinity && ctx.diam() >= static_cast<Distance>(len + 1);
  } else {
    hypothesis = ctx.induced(build_f1(len));
  }
  if (!hypothesis) return pass("F1^" + std::to_string(len) + " absent (vacuous)");
  const Distance d = diameter(ctx.iterate_of(Operator::kTotal, static_cast<std::size_t>(r + 1)));
  return verdict(d > static_cast<Distance>(k - r), "F1^" + std::to_string(len) + " present, diam(T^" +
                                                       std::to_string(r + 1) + ")=" + dist_str(d) +
                                                       " required > " + std::to_string(k - r));
}

CheckResult check_line_lemma(Context& ctx, long long k) {
  if (k < 2) return skip("k < 2");
  if (ctx.graph().order() < 3) return skip("n < 3");
  const Distance dl = ctx.diam_line();
  const PatternClause patterns = pattern_clause(ctx, k);
  const bool lhs = dl > static_cast<Distance>(k);
  return verdict(lhs == patterns.any(), "diam(L)=" + dist_str(dl) + " " + patterns.describe(k));
}

CheckResult check_line_necessary(Context& ctx, long long k) {
  const long long r = ctx.params().r;
  if (r < 1 || k < 2 * r + 3) return skip("requires r >= 1 and k >= 2r+3");
  const long long len = k - 2 * r - 1;
  if (ctx.induced(build_f1(len))) return pass("F1^" + std::to_string(len) + " induced");
  const Graph& h = ctx.iterate_of(Operator::kLine, static_cast<std::size_t>(r + 1));
  if (h.order() == 0) return skip("empty line-graph iterate");
  const Distance d = diameter(h);
  return verdict(!(d > static_cast<Distance>(k - r)),
                 "diam(L^" + std::to_string(r + 1) + ")=" + dist_str(d) + " F1^" + std::to_string(len) + " induced=no");
}

CheckResult check_line_sufficient(Context& ctx, long long k) {
  const long long r = ctx.params().r;
  if (r < 1 || r >= k - 1) return skip("requires 1 <= r < k-1");
  const bool f1 = ctx.induced(build_f1(k + 1));
  const bool f4 = !f1 && ctx.induced(build_f4(k));
  const bool f5 = !f1 && !f4 && ctx.induced(build_f5(k));
  if (!(f1 || f4 || f5)) return pass("no F1^{k+1}, F4^k, F5^k (vacuous)");
  const Graph& h = ctx.iterate_of(Operator::kLine, static_cast<std::size_t>(r + 1));
  if (h.order() == 0) return skip("empty line-graph iterate");
  const Distance d = diameter(h);
  return verdict(d > static_cast<Distance>(k - r), std::string("F1=") + yn(f1) + " F4=" + yn(f4) + " F5=" + yn(f5) +
                                                       " diam(L^" + std::to_string(r + 1) + ")=" + dist_str(d) +
                                                       " required > " + std::to_string(k - r));
}

std::optional<std::size_t> connected_regular(Context& ctx) {
  if (!ctx.connected()) return std::nullopt;
  return ctx.regular_degree();
}

CheckResult check_regular_structure(Context& ctx, long long k) {
  const auto r0 = connected_regular(ctx);
  if (!r0) return skip("not connected regular");
  if (k < 1) return skip("k < 1");
  const std::size_t n0 = ctx.graph().order();
  std::ostringstream detail;
  bool ok = true;

  const auto total = regular_iterate_params(n0, *r0, static_cast<std::size_t>(k), Operator::kTotal);
  const Graph& t = ctx.iterate_of(Operator::kTotal, static_cast<std::size_t>(k));
  const auto t_degree = is_regular(t);
  ok = ok && t.order() == total.n() && t_degree && *t_degree == total.r();
  detail << "T^" << k << ": formula (" << total.n() << "," << total.r() << ") built (" << t.order() << ","
         << (t_degree ? std::to_string(*t_degree) : std::string("irregular")) << ")";

  try {
    const auto line = regular_iterate_params(n0, *r0, static_cast<std::size_t>(k), Operator::kLine);
    const Graph& l = ctx.iterate_of(Operator::kLine, static_cast<std::size_t>(k));
    const auto l_degree = is_regular(l);
    const bool line_ok = l.order() == line.n() && (l.order() == 0 || (l_degree && *l_degree == line.r()));
    ok = ok && line_ok;
    detail << "; L^" << k << ": formula (" << line.n() << "," << line.r() << ") built (" << l.order() << ","
           << (l_degree ? std::to_string(*l_degree) : std::string("irregular")) << ")";
  } catch (const DomainError&) {
    detail << "; L^" << k << ": closed form undefined";
  }
  return verdict(ok, detail.str());
}

CheckResult check_total_spectra(Context& ctx) {
  const auto r = connected_regular(ctx);
  if (!r) return skip("not connected regular");
  if (*r < 2) return skip("r < 2");
  const std::size_t n = ctx.graph().order();
  const Spectrum adj = adjacency_spectrum(ctx.graph());
  const bool a_ok = spectra_match(total_adjacency_spectrum_formula(adj, n, *r), adjacency_spectrum(ctx.total()),
                                  kSpectrumTolerance);
  const bool q_ok =
      spectra_match(total_q_spectrum_formula(adj, n, *r), q_spectrum(ctx.total()), kSpectrumTolerance);
  return verdict(a_ok && q_ok, std::string("adjacency formula=") + yn(a_ok) + " Q formula=" + yn(q_ok));
}

// lower <= ie < upper; strict lower unless `equality` is expected, in which
// case |ie - lower| must vanish.
CheckResult sandwich(double ie, EnergyBounds b, bool equality, const std::string& label) {
  const bool upper_ok = b.upper - ie > kEnergyTolerance;
  const bool lower_ok = equality ? std::abs(ie - b.lower) <= kEnergyTolerance : ie - b.lower > kEnergyTolerance;
  return verdict(upper_ok && lower_ok, label + " lower=" + fmt(b.lower) + " IE=" + fmt(ie) + " upper=" +
                                           fmt(b.upper) + (equality ? " (equality expected)" : ""));
}

CheckResult check_total_bounds(Context& ctx) {
  const auto r = connected_regular(ctx);
  if (!r) return skip("not connected regular");
  const std::size_t n = ctx.graph().order();
  const auto b = ie_total_bounds(static_cast<double>(n), static_cast<double>(*r));
  return sandwich(incidence_energy(ctx.total()), b, n == 2, "n=" + std::to_string(n) + " r=" + std::to_string(*r));
}

CheckResult check_iterated_bounds(Context& ctx, long long k) {
  const auto r0 = connected_regular(ctx);
  if (!r0) return skip("not connected regular");
  if (*r0 < 2) return skip("r0 < 2");
  if (k < 0) return skip("k < 0");
  const auto p = regular_iterate_params(ctx.graph().order(), *r0, static_cast<std::size_t>(k), Operator::kTotal);
  const Graph& next = ctx.iterate_of(Operator::kTotal, static_cast<std::size_t>(k + 1));
  const auto b = ie_total_bounds(static_cast<double>(p.n()), static_cast<double>(p.r()));
  return sandwich(incidence_energy(next), b, false,
                  "n_k=" + std::to_string(p.n()) + " r_k=" + std::to_string(p.r()));
}

CheckResult check_consecutive_bounds(Context& ctx, long long k) {
  const auto r0 = connected_regular(ctx);
  if (!r0) return skip("not connected regular");
  if (k < 1) return skip("k < 1");
  const std::size_t n0 = ctx.graph().order();
  const auto p = regular_iterate_params(n0, *r0, static_cast<std::size_t>(k), Operator::kTotal);
  const std::size_t i = static_cast<std::size_t>(k);
  const auto b = ie_total_bounds_consecutive(static_cast<double>(p.orders[i]), static_cast<double>(p.degrees[i]),
                                             static_cast<double>(p.orders[i - 1]),
                                             static_cast<double>(p.degrees[i - 1]));
  const bool equality = n0 == 2 && k == 1;
  return sandwich(incidence_energy(ctx.iterate_of(Operator::kTotal, i)), b, equality,
                  "n_k=" + std::to_string(p.orders[i]) + " r_k=" + std::to_string(p.degrees[i]));
}

CheckResult check_line_energy(Context& ctx, long long k) {
  const auto r0 = connected_regular(ctx);
  if (!r0) return skip("not connected regular");
  if (k < 0) return skip("k < 0");
  const Graph& h = ctx.iterate_of(Operator::kLine, static_cast<std::size_t>(k));
  const auto r = is_regular(h);
  if (h.order() < 2 || !r) return skip("degenerate line-graph iterate");
  double bound = 0;
  try {
    bound = ie_line_bound(static_cast<double>(h.order()), static_cast<double>(*r));
  } catch (const DomainError& e) {
    return skip(e.what());
  }
  const double ie = incidence_energy(ctx.iterate_of(Operator::kLine, static_cast<std::size_t>(k + 1)));
  const bool complete = h.size() == h.order() * (h.order() - 1) / 2;
  const bool equal = std::abs(ie - bound) <= kEnergyTolerance * std::max(1.0, bound);
  const bool ok = ie <= bound + kEnergyTolerance * std::max(1.0, bound) && equal == complete;
  return verdict(ok, "n=" + std::to_string(h.order()) + " r=" + std::to_string(*r) + " IE=" + fmt(ie) +
                         " bound=" + fmt(bound) + " complete=" + yn(complete));
}

CheckResult check_factorizations(Context& ctx) {
  const Graph& g = ctx.graph();
  const IntMatrix inc = incidence_matrix(g);
  const IntMatrix q = signless_laplacian(g);
  const IntMatrix a_line = adjacency_matrix(ctx.line());
  const IntMatrix gram = inc.transpose() * inc;
  const IntMatrix expected =
      IntMatrix::Identity(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(g.size())) * 2 + a_line;
  const bool first = (inc * inc.transpose() - q).cwiseAbs().sum() == 0;
  const bool second = (gram - expected).cwiseAbs().sum() == 0;
  return verdict(first && second, std::string("I*I^T=Q:") + yn(first) + " I^T*I=2I+A(L):" + yn(second));
}

CheckResult check_with_context(TheoremId id, Context& ctx, long long k) {
  if (id != TheoremId::EQ_FACTORIZATIONS && !ctx.connected()) return skip("disconnected");
  switch (id) {
    case TheoremId::L2_1: return check_trichotomy(ctx);
    case TheoremId::T2_1: return check_diam_k(ctx, k, false);
    case TheoremId::T2_2: return check_diam_k(ctx, k, true);
    case TheoremId::T2_3: return check_diam_eq_1(ctx);
    case TheoremId::L2_3: return check_lemma_small(ctx);
    case TheoremId::T2_5: return check_diam_eq_2(ctx);
    case TheoremId::T2_6: return check_total_necessary(ctx, k);
    case TheoremId::T2_7: return check_total_sufficient(ctx, k);
    case TheoremId::L2_4: return check_line_lemma(ctx, k);
    case TheoremId::T2_8: return check_line_necessary(ctx, k);
    case TheoremId::T2_9: return check_line_sufficient(ctx, k);
    case TheoremId::T3_1: return check_regular_structure(ctx, k);
    case TheoremId::L3_1: return check_total_spectra(ctx);
    case TheoremId::T3_2: return check_total_bounds(ctx);
    case TheoremId::C3_2: return check_iterated_bounds(ctx, k);
    case TheoremId::C3_3: return check_consecutive_bounds(ctx, k);
    case TheoremId::T1_1: return check_line_energy(ctx, k);
    case TheoremId::EQ_FACTORIZATIONS: return check_factorizations(ctx);
    case TheoremId::T3_3: break;
  }
  throw PreconditionError("T3_3 compares pairs of graphs; use run_corpus");
}

CheckResult guarded(TheoremId id, Context& ctx, long long k) {
  try {
    return check_with_context(id, ctx, k);
  } catch (const ResourceError& e) {
    CheckResult r = skip(e.what());
    r.flag = e.what();
    return r;
  }
}

bool uses_k(TheoremId id) { return !default_ks(id).empty(); }

std::string params_string(TheoremId id, long long k, const VerifyParams& params) {
  std::string out;
  if (uses_k(id)) out = "k=" + std::to_string(k);
  if (id == TheoremId::T2_6 || id == TheoremId::T2_7 || id == TheoremId::T2_8 || id == TheoremId::T2_9) {
    out += " r=" + std::to_string(params.r);
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct CaseRecord {
  std::size_t graph = 0;
  std::string params;
  CheckResult result;
};

void tally(VerificationReport& report, const Corpus& corpus, std::vector<std::vector<CaseRecord>>& cases) {
  for (auto& per_graph : cases) {
    for (auto& c : per_graph) {
      const std::string g6 = to_graph6(corpus.graphs[c.graph]);
      if (c.result.outcome == Outcome::kSkip) {
        ++report.skipped;
      } else {
        ++report.checked;
      }
      if (c.result.outcome == Outcome::kFail) report.failures.push_back({g6, c.params, c.result.detail});
      if (c.result.flag) report.flags.push_back({g6, c.params, *c.result.flag});
    }
  }
}

// Pairs of connected r-regular graphs of equal order, r >= 3.
void run_cospectral_pairs(VerificationReport& report, const Corpus& corpus, const VerifyParams& params,
                          const std::vector<long long>& ks) {
  struct Info {
    std::optional<std::size_t> degree;
    CharPoly seed;
    std::map<long long, std::pair<std::size_t, std::size_t>> sizes;  // k -> (order, edges)
    std::map<long long, CharPoly> polys;                             // k -> char poly of T^k
    std::vector<std::string> notes;
  };
  std::vector<Info> info(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), params.threads, [&](std::size_t i) {
    const Graph& g = corpus.graphs[i];
    Info& out = info[i];
    if (!is_connected(g)) return;
    out.degree = is_regular(g);
    if (!out.degree || *out.degree < 3) return;
    out.seed = char_poly(adjacency_matrix(g));
    Graph current = g;
    long long built = 0;
    for (long long k : ks) {
      if (k < 1) continue;
      try {
        current = iterate(current, Operator::kTotal, static_cast<std::size_t>(k - built), params.max_vertices);
        built = k;
      } catch (const ResourceError& e) {
        out.notes.push_back(e.what());
        break;
      }
      out.sizes[k] = {current.order(), current.size()};
      if (current.order() <= kExactSpectrumLimit) out.polys[k] = char_poly(adjacency_matrix(current));
    }
  });

  for (std::size_t i = 0; i < info.size(); ++i) {
    if (!info[i].degree || *info[i].degree < 3) ++report.skipped;
    for (const auto& note : info[i].notes) report.flags.push_back({to_graph6(corpus.graphs[i]), "", note});
  }
  for (std::size_t i = 0; i < info.size(); ++i) {
    if (!info[i].degree || *info[i].degree < 3) continue;
    for (std::size_t j = i + 1; j < info.size(); ++j) {
      if (info[j].degree != info[i].degree || corpus.graphs[j].order() != corpus.graphs[i].order()) continue;
      const bool seeds_cospectral = info[i].seed == info[j].seed;
      const std::string pair = to_graph6(corpus.graphs[i]) + " " + to_graph6(corpus.graphs[j]);
      for (long long k : ks) {
        auto si = info[i].sizes.find(k);
        auto sj = info[j].sizes.find(k);
        if (si == info[i].sizes.end() || sj == info[j].sizes.end()) {
          ++report.skipped;
          continue;
        }
        ++report.checked;
        const std::string p = "k=" + std::to_string(k);
        if (si->second != sj->second) {
          report.failures.push_back({pair, p, "orders/edges differ: (" + std::to_string(si->second.first) + "," +
                                                  std::to_string(si->second.second) + ") vs (" +
                                                  std::to_string(sj->second.first) + "," +
                                                  std::to_string(sj->second.second) + ")"});
        }
        auto pi = info[i].polys.find(k);
        auto pj = info[j].polys.find(k);
        if (pi == info[i].polys.end() || pj == info[j].polys.end()) continue;
        const bool iterates_cospectral = pi->second == pj->second;
        if (iterates_cospectral != seeds_cospectral) {
          report.failures.push_back({pair, p, std::string("seeds cospectral=") + yn(seeds_cospectral) +
                                                  " iterates cospectral=" + yn(iterates_cospectral)});
        }
        if (k == ks.front() && seeds_cospectral && !isomorphic(corpus.graphs[i], corpus.graphs[j])) {
          report.flags.push_back({pair, p, "cospectral non-isomorphic seed pair"});
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [value, name] : kTheoremNames) {
    if (value == id) return name;
  }
  return "?";
}

TheoremId parse_theorem_id(std::string_view text) {
  const std::string key = upper(text);
  for (const auto& [value, name] : kTheoremNames) {
    if (key == name) return value;
  }
  throw PreconditionError("unknown theorem id '" + std::string(text) + "'");
}

std::vector<TheoremId> all_theorem_ids() {
  std::vector<TheoremId> out;
  for (const auto& entry : kTheoremNames) out.push_back(entry.id);
  return out;
}

std::string_view to_string(Reading reading) {
  for (const auto& [value, name] : kReadingNames) {
    if (value == reading) return name;
  }
  return "?";
}

Reading parse_reading(std::string_view text) {
  for (const auto& [value, name] : kReadingNames) {
    if (text == name) return value;
  }
  throw PreconditionError("unknown reading '" + std::string(text) +
                          "' (expected literal, witnessed, geodesic or any-diameter-path)");
}

std::vector<long long> default_ks(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1:
    case TheoremId::T2_2: return {2, 3, 4, 5};
    case TheoremId::L2_4: return {2, 3, 4};
    case TheoremId::T2_6: return {7, 8};
    case TheoremId::T2_7: return {4, 5};
    case TheoremId::T2_8: return {5, 6};
    case TheoremId::T2_9: return {3, 4};
    case TheoremId::T3_1: return {1, 2};
    case TheoremId::C3_2: return {0, 1};
    case TheoremId::C3_3: return {1, 2};
    case TheoremId::T1_1: return {0, 1};
    case TheoremId::T3_3: return {1, 2};
    default: return {};
  }
}

CheckResult check(TheoremId id, const Graph& g, long long k, const VerifyParams& params) {
  Context ctx(g, params);
  return guarded(id, ctx, k);
}

VerificationReport run_corpus(TheoremId id, const Corpus& corpus, const VerifyParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (corpus.graphs.empty()) throw PreconditionError("corpus '" + corpus.descriptor + "' is empty");
  VerificationReport report;
  report.theorem = id;
  report.corpus = corpus.descriptor;
  report.reading = params.reading;
  report.graphs = corpus.graphs.size();
  std::vector<long long> ks = params.ks.empty() ? default_ks(id) : params.ks;
  if (!uses_k(id)) ks = {0};

  if (id == TheoremId::T3_3) {
    run_cospectral_pairs(report, corpus, params, ks);
  } else {
    std::vector<std::vector<CaseRecord>> cases(corpus.graphs.size());
    parallel_for(corpus.graphs.size(), params.threads, [&](std::size_t i) {
      Context ctx(corpus.graphs[i], params);
      for (long long k : ks) cases[i].push_back({i, params_string(id, k, params), guarded(id, ctx, k)});
    });
    tally(report, corpus, cases);
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const VerificationReport& report, int indent) {
  auto findings = [](const std::vector<Finding>& list) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& f : list) out.push_back({{"graph6", f.graph6}, {"params", f.params}, {"detail", f.detail}});
    return out;
  };
  nlohmann::ordered_json j;
  j["theorem"] = std::string(to_string(report.theorem));
  j["corpus"] = report.corpus;
  j["reading"] = std::string(to_string(report.reading));
  j["graphs"] = report.graphs;
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  j["failures"] = findings(report.failures);
  j["flags"] = findings(report.flags);
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(indent);
}

bool has_witnessed_pattern(const Graph& g, const DistanceTable& dist, const Graph& pattern, long long k) {
  const auto a = static_cast<Vertex>(0), b = static_cast<Vertex>(1);
  const auto c = static_cast<Vertex>(k + 1), d = static_cast<Vertex>(k + 2);
  if (pattern.order() != static_cast<std::size_t>(k + 3)) {
    throw PreconditionError("witnessed patterns need a spine on k+3 vertices");
  }
  auto accept = [&](std::span<const Vertex> map) {
    Distance best = kInfinity;
    for (Vertex x : {map[a], map[b]}) {
      for (Vertex y : {map[c], map[d]}) best = std::min(best, dist(x, y));
    }
    return best >= static_cast<Distance>(k);
  };
  return find_embedding(g, pattern, EmbeddingMode::kInduced, accept).has_value();
}

}  // namespace itg
