#include "itg/transforms.hpp"

#include <string>

#include "itg/error.hpp"

namespace itg {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Edge-edge adjacencies of L(g) with edge ids shifted by `offset`: every
// pair of edges meeting at a common vertex.
void append_line_pairs(const Graph& g, Vertex offset, Pairs& pairs) {
  std::vector<Vertex> incident;
  for (Vertex v = 0; v < g.order(); ++v) {
    incident.clear();
    for (Vertex w : g.neighbors(v)) incident.push_back(static_cast<Vertex>(*g.edge_index(v, w)));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        pairs.emplace_back(offset + incident[i], offset + incident[j]);
  }
}

Graph build(std::size_t n, const Pairs& pairs) {
  return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

std::size_t next_order(const Graph& g, Operator op) {
  return op == Operator::kLine ? g.size() : g.order() + g.size();
}

void guard(const Graph& g, Operator op, std::size_t step, std::size_t max_vertices) {
  const std::size_t projected = next_order(g, op);
  if (projected > max_vertices) {
    throw ResourceError("iterate step " + std::to_string(step) + " would produce " + std::to_string(projected) +
                            " vertices, exceeding the cap of " + std::to_string(max_vertices) +
                            " (override with ITG_MAX_VERTICES / --max-vertices)",
                        projected, max_vertices);
  }
}

}  // namespace

ProvenancedGraph line_graph(const Graph& g) {
  Pairs pairs;
  append_line_pairs(g, 0, pairs);
  ProvenancedGraph out{build(g.size(), pairs), {}};
  out.provenance.reserve(g.size());
  for (const Edge& e : g.edges()) out.provenance.emplace_back(EdgeOf{e});
  return out;
}

ProvenancedGraph total_graph(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Pairs pairs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    const Vertex ev = n + static_cast<Vertex>(i);
    pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(e.u, ev);
    pairs.emplace_back(e.v, ev);
  }
  append_line_pairs(g, n, pairs);
  ProvenancedGraph out{build(g.order() + g.size(), pairs), {}};
  out.provenance.reserve(g.order() + g.size());
  for (Vertex v = 0; v < n; ++v) out.provenance.emplace_back(VertexOf{v});
  for (const Edge& e : g.edges()) out.provenance.emplace_back(EdgeOf{e});
  return out;
}

Graph iterate(const Graph& g, Operator op, std::size_t k, std::size_t max_vertices) {
  Graph current = g;
  for (std::size_t step = 1; step <= k; ++step) {
    guard(current, op, step, max_vertices);
    current = (op == Operator::kLine ? line_graph(current) : total_graph(current)).graph;
  }
  return current;
}

ProvenancedGraph iterate_provenanced(const Graph& g, Operator op, std::size_t k, std::size_t max_vertices) {
  if (k == 0) throw PreconditionError("iterate_provenanced requires k >= 1");
  Graph previous = iterate(g, op, k - 1, max_vertices);
  guard(previous, op, k, max_vertices);
  return op == Operator::kLine ? line_graph(previous) : total_graph(previous);
}

}  // namespace itg
