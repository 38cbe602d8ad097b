#include "itg/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph_io.hpp"
#include "itg/isomorphism.hpp"

namespace itg {

namespace {

using CertMap = std::unordered_map<Certificate, Graph, CertificateHash>;

// Canonical representatives ordered by certificate.
std::vector<Graph> sorted_canonical(CertMap& found) {
  std::vector<std::pair<Certificate, Graph>> items(std::make_move_iterator(found.begin()),
                                                   std::make_move_iterator(found.end()));
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(items.size());
  for (auto& [cert, g] : items) out.push_back(relabel(g, canonical_labeling(g)));
  return out;
}

std::vector<Graph> connected_only(std::vector<Graph> graphs) {
  std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
  return graphs;
}

// One saturation step: the unsaturated vertex of largest degree receives
// all of its missing edges.
void saturate_step(const Graph& g, std::size_t r, CertMap& partial, CertMap& done) {
  const std::size_t n = g.order();
  std::optional<Vertex> pick;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < r && (!pick || g.degree(v) > g.degree(*pick))) pick = v;
  }
  const Vertex v = *pick;
  std::vector<Vertex> candidates;
  for (Vertex u = 0; u < n; ++u) {
    if (u != v && g.degree(u) < r && !g.has_edge(u, v)) candidates.push_back(u);
  }
  const std::size_t need = r - g.degree(v);
  if (candidates.size() < need) return;

  std::vector<std::size_t> choice(need);
  for (std::size_t i = 0; i < need; ++i) choice[i] = i;
  while (true) {
    EdgeList edges(g.edges().begin(), g.edges().end());
    for (std::size_t i : choice) edges.push_back(Edge{std::min(v, candidates[i]), std::max(v, candidates[i])});
    Graph next = Graph::from_edges(n, std::span<const Edge>(edges));

    // Residual degrees must be realisable among unsaturated vertices.
    bool feasible = true;
    std::size_t residual = 0;
    for (Vertex u = 0; u < n && feasible; ++u) {
      const std::size_t missing = r - next.degree(u);
      residual += missing;
      if (missing == 0) continue;
      std::size_t room = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && next.degree(w) < r && !next.has_edge(u, w)) ++room;
      }
      feasible = room >= missing;
    }
    if (feasible && residual % 2 == 0) {
      auto cert = canonical_certificate(next);
      (residual == 0 ? done : partial).try_emplace(std::move(cert), std::move(next));
    }

    // Next combination in lexicographic order.
    std::size_t i = need;
    while (i > 0 && choice[i - 1] == candidates.size() - need + i - 1) --i;
    if (i == 0) break;
    ++choice[i - 1];
    for (std::size_t j = i; j < need; ++j) choice[j] = choice[j - 1] + 1;
  }
}

std::vector<Graph> all_regular(std::size_t n, std::size_t r) {
  CertMap done;
  if (r == 0) {
    Graph empty = Graph::from_edges(n, std::span<const Edge>());
    done.try_emplace(canonical_certificate(empty), empty);
    return sorted_canonical(done);
  }
  CertMap level;
  Graph empty = Graph::from_edges(n, std::span<const Edge>());
  level.try_emplace(canonical_certificate(empty), empty);
  while (!level.empty()) {
    CertMap next;
    for (const auto& [cert, g] : level) saturate_step(g, r, next, done);
    level = std::move(next);
  }
  return sorted_canonical(done);
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text, std::string_view context) {
  auto parse_one = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw PreconditionError("bad number '" + std::string(s) + "' in corpus '" + std::string(context) + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t n = parse_one(text);
    return {n, n};
  }
  const std::size_t lo = parse_one(text.substr(0, dots));
  const std::size_t hi = parse_one(text.substr(dots + 2));
  if (lo > hi) throw PreconditionError("empty range in corpus '" + std::string(context) + "'");
  return {lo, hi};
}

}  // namespace

std::vector<Graph> gen_all_graphs(std::size_t n) {
  if (n > kExhaustiveLimit) {
    throw PreconditionError("exhaustive generation is limited to n <= " + std::to_string(kExhaustiveLimit) +
                            "; use a file:PATH corpus for larger orders");
  }
  if (n == 0) return {Graph::from_edges(0, std::span<const Edge>())};
  std::vector<Graph> previous{Graph::from_edges(1, std::span<const Edge>())};
  for (std::size_t order = 2; order <= n; ++order) {
    CertMap found;
    const auto last = static_cast<Vertex>(order - 1);
    for (const Graph& g : previous) {
      for (std::uint32_t mask = 0; mask < (1U << last); ++mask) {
        EdgeList edges(g.edges().begin(), g.edges().end());
        for (Vertex u = 0; u < last; ++u) {
          if (mask & (1U << u)) edges.push_back(Edge{u, last});
        }
        Graph h = Graph::from_edges(order, std::span<const Edge>(edges));
        auto cert = canonical_certificate(h);
        found.try_emplace(std::move(cert), std::move(h));
      }
    }
    previous = sorted_canonical(found);
  }
  return previous;
}

std::vector<Graph> gen_connected_graphs(std::size_t n) {
  if (n == 0) throw PreconditionError("gen_connected_graphs requires n >= 1");
  return connected_only(gen_all_graphs(n));
}

std::vector<Graph> gen_regular_graphs(std::size_t n, std::size_t r, bool connected) {
  if (n > kRegularLimit) {
    throw PreconditionError("regular generation is limited to n <= " + std::to_string(kRegularLimit));
  }
  if (n == 0 || r >= n || (n * r) % 2 != 0) return {};
  std::vector<Graph> graphs;
  if (2 * r > n - 1) {
    CertMap found;
    for (const Graph& g : all_regular(n, n - 1 - r)) {
      Graph c = complement(g);
      auto cert = canonical_certificate(c);
      found.try_emplace(std::move(cert), std::move(c));
    }
    graphs = sorted_canonical(found);
  } else {
    graphs = all_regular(n, r);
  }
  return connected ? connected_only(std::move(graphs)) : graphs;
}

std::vector<Graph> gen_regular_corpus(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
    for (std::size_t r = 0; r < n; ++r) {
      for (Graph& g : gen_regular_graphs(n, r)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> named_regular_graphs() {
  return {build_petersen(), build_cube(), build_shrikhande(), build_rook(4)};
}

Corpus load_corpus(std::string_view descriptor) {
  Corpus corpus{std::string(descriptor), {}};
  std::size_t start = 0;
  while (start <= descriptor.size()) {
    const std::size_t plus = descriptor.find('+', start);
    const std::string_view part =
        descriptor.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    start = plus == std::string_view::npos ? descriptor.size() + 1 : plus + 1;

    auto append = [&](std::vector<Graph> graphs) {
      for (Graph& g : graphs) corpus.graphs.push_back(std::move(g));
    };
    const auto colon = part.find(':');
    const std::string_view kind = part.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : part.substr(colon + 1);
    if (kind == "gen") {
      const auto [lo, hi] = parse_range(arg, descriptor);
      for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) append(gen_connected_graphs(n));
    } else if (kind == "regular") {
      const auto [lo, hi] = parse_range(arg, descriptor);
      append(gen_regular_corpus(lo, hi));
    } else if (kind == "named" && arg.empty()) {
      append(named_regular_graphs());
    } else if (kind == "family") {
      corpus.graphs.push_back(parse_family(arg).build());
    } else if (kind == "file") {
      std::ifstream in{std::string(arg)};
      if (!in) throw Error("cannot open corpus file '" + std::string(arg) + "'");
      append(read_graphs(in));
    } else {
      throw PreconditionError("unknown corpus '" + std::string(part) +
                              "' (expected gen:N, gen:A..B, regular:A..B, named, family:SPEC or file:PATH)");
    }
  }
  if (corpus.graphs.empty()) throw PreconditionError("corpus '" + std::string(descriptor) + "' is empty");
  return corpus;
}

}  // namespace itg
