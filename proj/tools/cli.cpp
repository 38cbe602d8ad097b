#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "itg/charpoly.hpp"
#include "itg/corpus.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph_io.hpp"
#include "itg/isomorphism.hpp"
#include "itg/pattern_search.hpp"
#include "itg/spectral.hpp"
#include "itg/transforms.hpp"
#include "itg/verify.hpp"

namespace itg::cli {

namespace {

struct InputOptions {
  std::string in;
  std::string family;
  std::string out;
};

struct IterateOptions {
  std::string op = "total";
  std::size_t k = 1;
  std::optional<std::size_t> max_vertices;
};

void add_input(CLI::App* cmd, InputOptions& o) {
  auto* in = cmd->add_option("--in", o.in, "Input file (graph6 lines or an edge list); default stdin");
  auto* family = cmd->add_option("--family", o.family, "Build the input from a family, e.g. f3:5, lol:8,4, k:6");
  in->excludes(family);
  cmd->add_option("--out", o.out, "Output file; default stdout");
}

std::size_t cap_from(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ITG_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw PreconditionError("ITG_MAX_VERTICES must be a non-negative integer");
    return static_cast<std::size_t>(value);
  }
  return kDefaultMaxVertices;
}

Operator parse_operator(const std::string& op) {
  if (op == "total") return Operator::kTotal;
  if (op == "line") return Operator::kLine;
  throw PreconditionError("--op must be total or line");
}

MatrixKind parse_matrix(const std::string& m) {
  if (m == "a") return MatrixKind::kAdjacency;
  if (m == "q") return MatrixKind::kSignlessLaplacian;
  throw PreconditionError("--matrix must be a or q");
}

std::vector<Graph> read_input(const InputOptions& o) {
  if (!o.family.empty()) return {parse_family(o.family).build()};
  std::vector<Graph> graphs;
  if (o.in.empty() || o.in == "-") {
    graphs = read_graphs(std::cin);
  } else {
    std::ifstream file(o.in);
    if (!file) throw Error("cannot open '" + o.in + "'");
    graphs = read_graphs(file);
  }
  if (graphs.empty()) throw ParseError("no graph in input", 0);
  return graphs;
}

Graph read_single(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  auto graphs = read_graphs(file);
  if (graphs.size() != 1) throw PreconditionError("'" + path + "' must hold exactly one graph");
  return graphs.front();
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string diameter_text(Distance d) { return d == kInfinity ? "inf" : std::to_string(d); }

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  std::string s(buffer);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated total and line graphs: diameters, spectra, incidence energy", "itg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  InputOptions input;
  IterateOptions iter;
  int status = kExitOk;

  auto* transform = app.add_subcommand("transform", "Apply the total or line operator k times");
  add_input(transform, input);
  transform->add_option("--op", iter.op, "total | line")->check(CLI::IsMember({"total", "line"}));
  transform->add_option("--k", iter.k, "Number of applications");
  transform->add_option("--max-vertices", iter.max_vertices, "Iterate size cap (env ITG_MAX_VERTICES)");
  std::string format = "g6";
  transform->add_option("--format", format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));

  auto* diameter_cmd = app.add_subcommand("diameter", "Print the diameter (inf when disconnected)");
  add_input(diameter_cmd, input);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of A or Q, descending");
  add_input(spectrum, input);
  std::string matrix = "a";
  bool exact = false;
  spectrum->add_option("--matrix", matrix, "a | q")->check(CLI::IsMember({"a", "q"}));
  spectrum->add_flag("--exact", exact, "Print the exact characteristic polynomial instead");

  auto* energy = app.add_subcommand("energy", "Incidence energy");
  add_input(energy, input);

  auto* bounds = app.add_subcommand("bounds", "Incidence-energy bounds for a regular graph");
  add_input(bounds, input);
  bounds->add_option("--op", iter.op, "total | line")->check(CLI::IsMember({"total", "line"}));
  std::optional<double> bound_n, bound_r;
  auto* n_opt = bounds->add_option("--n", bound_n, "Order (formula only, no input graph)");
  auto* r_opt = bounds->add_option("--r", bound_r, "Degree (formula only, no input graph)");
  n_opt->needs(r_opt);
  r_opt->needs(n_opt);

  auto* contains = app.add_subcommand("contains", "Search for a pattern; exit 0 found, 1 not found");
  add_input(contains, input);
  std::string pattern;
  bool induced = false;
  contains->add_option("--pattern", pattern, "Pattern family, e.g. f2:3")->required();
  contains->add_flag("--induced", induced, "Induced embedding (default: subgraph)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a statement over a corpus; exit 0 pass, 1 failures");
  std::string theorem, corpus_desc = "gen:1..7", report_path, reading = "literal";
  VerifyParams vparams;
  std::optional<std::size_t> verify_cap;
  verify_cmd->add_option("--theorem", theorem, "Checker id, e.g. T2_1, L3_1, EQ_FACTORIZATIONS")->required();
  verify_cmd->add_option("--k", vparams.ks, "k values (default: the checker's set)")->delimiter(',');
  verify_cmd->add_option("--r", vparams.r, "Iteration depth parameter r");
  verify_cmd->add_option("--corpus", corpus_desc, "gen:A..B, regular:A..B, named, family:SPEC, file:PATH; join with +");
  verify_cmd->add_option("--report", report_path, "Write the JSON report here (default: stdout)");
  verify_cmd->add_option("--reading", reading, "literal | witnessed | geodesic | any-diameter-path");
  verify_cmd->add_option("--threads", vparams.threads, "Worker threads (0: all cores)");
  verify_cmd->add_option("--max-vertices", verify_cap, "Iterate size cap (env ITG_MAX_VERTICES)");

  auto* cospectral = app.add_subcommand("cospectral", "Exact cospectrality and isomorphism of two graphs");
  std::string path_a, path_b, co_op = "none";
  std::size_t co_k = 1;
  std::optional<std::size_t> co_cap;
  cospectral->add_option("--a", path_a, "First graph file")->required();
  cospectral->add_option("--b", path_b, "Second graph file")->required();
  cospectral->add_option("--op", co_op, "none | total | line")->check(CLI::IsMember({"none", "total", "line"}));
  cospectral->add_option("--k", co_k, "Iterations of --op");
  cospectral->add_option("--matrix", matrix, "a | q")->check(CLI::IsMember({"a", "q"}));
  cospectral->add_option("--max-vertices", co_cap, "Iterate size cap (env ITG_MAX_VERTICES)");

  auto* family = app.add_subcommand("family", "Print a family member");
  std::string family_spec, family_out;
  family->add_option("spec", family_spec, "e.g. f4:5, lol:8,4, petersen")->required();
  family->add_option("--format", format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));
  family->add_option("--out", family_out, "Output file; default stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (transform->parsed()) {
      const Operator op = parse_operator(iter.op);
      const std::size_t cap = cap_from(iter.max_vertices);
      const auto graphs = read_input(input);
      Sink sink(input.out, out);
      for (const Graph& g : graphs) {
        const Graph result = iterate(g, op, iter.k, cap);
        *sink << (format == "edges" ? to_edge_list(result) : to_graph6(result) + "\n");
      }
    } else if (diameter_cmd->parsed()) {
      Sink sink(input.out, out);
      for (const Graph& g : read_input(input)) *sink << diameter_text(diameter(g)) << "\n";
    } else if (spectrum->parsed()) {
      const MatrixKind kind = parse_matrix(matrix);
      Sink sink(input.out, out);
      for (const Graph& g : read_input(input)) {
        if (exact) {
          *sink << char_poly(graph_matrix(g, kind)).to_string() << "\n";
          continue;
        }
        const Spectrum s = eigenvalues(graph_matrix(g, kind));
        // Rounding noise around zero would otherwise print as e-17 values.
        const double noise = 1e-10 * std::max(1.0, s.size() ? std::abs(s.values.front()) : 0.0);
        for (std::size_t i = 0; i < s.size(); ++i) {
          *sink << (i ? " " : "") << format_real(std::abs(s.values[i]) < noise ? 0.0 : s.values[i]);
        }
        *sink << "\n";
      }
    } else if (energy->parsed()) {
      Sink sink(input.out, out);
      for (const Graph& g : read_input(input)) *sink << format_real(incidence_energy(g)) << "\n";
    } else if (bounds->parsed()) {
      const Operator op = parse_operator(iter.op);
      Sink sink(input.out, out);
      if (bound_n) {
        if (op == Operator::kTotal) {
          const auto b = ie_total_bounds(*bound_n, *bound_r);
          *sink << "lower " << format_real(b.lower) << "\nupper " << format_real(b.upper) << "\n";
        } else {
          *sink << "upper " << format_real(ie_line_bound(*bound_n, *bound_r)) << "\n";
        }
        return kExitOk;
      }
      for (const Graph& g : read_input(input)) {
        const auto r = is_regular(g);
        if (!r || g.order() == 0) throw PreconditionError("bounds need a regular graph");
        const auto n = static_cast<double>(g.order());
        if (op == Operator::kTotal) {
          const auto b = ie_total_bounds(n, static_cast<double>(*r));
          const double ie = incidence_energy(total_graph(g).graph);
          const bool ok = b.lower <= ie + 1e-9 && ie < b.upper;
          if (!ok) status = kExitNegative;
          *sink << "lower " << format_real(b.lower) << " ie " << format_real(ie) << " upper "
                << format_real(b.upper) << (ok ? " ok" : " violated") << "\n";
        } else {
          const double bound = ie_line_bound(n, static_cast<double>(*r));
          const double ie = incidence_energy(line_graph(g).graph);
          const bool ok = ie <= bound + 1e-9 * std::max(1.0, bound);
          if (!ok) status = kExitNegative;
          *sink << "ie " << format_real(ie) << " upper " << format_real(bound) << (ok ? " ok" : " violated") << "\n";
        }
      }
    } else if (contains->parsed()) {
      const Graph p = parse_family(pattern).build();
      Sink sink(input.out, out);
      for (const Graph& g : read_input(input)) {
        const auto e = induced ? contains_induced(g, p) : contains_subgraph(g, p);
        if (!e) {
          status = kExitNegative;
          *sink << "not found\n";
          continue;
        }
        *sink << "found";
        for (std::size_t v = 0; v < e->map.size(); ++v) *sink << " " << v << "->" << e->map[v];
        *sink << "\n";
      }
    } else if (verify_cmd->parsed()) {
      const TheoremId id = parse_theorem_id(theorem);
      vparams.reading = parse_reading(reading);
      vparams.max_vertices = cap_from(verify_cap);
      const Corpus corpus = load_corpus(corpus_desc);
      const VerificationReport report = run_corpus(id, corpus, vparams);
      const std::string json = report_to_json(report);
      if (report_path.empty()) {
        out << json << "\n";
      } else {
        Sink sink(report_path, out);
        *sink << json << "\n";
        out << to_string(id) << " " << (report.passed() ? "PASS" : "FAIL") << " checked=" << report.checked
            << " skipped=" << report.skipped << " failures=" << report.failures.size() << "\n";
      }
      status = report.passed() ? kExitOk : kExitNegative;
    } else if (cospectral->parsed()) {
      const MatrixKind kind = parse_matrix(matrix);
      Graph a = read_single(path_a);
      Graph b = read_single(path_b);
      if (co_op != "none") {
        const Operator op = parse_operator(co_op);
        const std::size_t cap = cap_from(co_cap);
        a = iterate(a, op, co_k, cap);
        b = iterate(b, op, co_k, cap);
      }
      const auto cert = cospectral_certificate(a, b, kind);
      nlohmann::ordered_json j;
      j["cospectral"] = cert.cospectral;
      j["isomorphic"] = cert.isomorphic;
      j["order_a"] = a.order();
      j["order_b"] = b.order();
      j["edges_a"] = a.size();
      j["edges_b"] = b.size();
      j["matrix"] = matrix;
      j["char_poly_a"] = cert.poly_a.to_string();
      if (!cert.cospectral) j["char_poly_b"] = cert.poly_b.to_string();
      out << j.dump(2) << "\n";
    } else if (family->parsed()) {
      const Graph g = parse_family(family_spec).build();
      Sink sink(family_out, out);
      *sink << (format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n");
    }
  } catch (const std::exception& e) {
    err << "itg: " << e.what() << "\n";
    return kExitError;
  }
  out.flush();
  return status;
}

}  // namespace itg::cli
