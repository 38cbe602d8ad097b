#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

/// Where a vertex of a derived graph came from.
struct VertexOf {
  Vertex vertex = 0;
  friend bool operator==(const VertexOf&, const VertexOf&) = default;
};
struct EdgeOf {
  Edge edge;
  friend bool operator==(const EdgeOf&, const EdgeOf&) = default;
};
using Provenance = std::variant<VertexOf, EdgeOf>;

/// A derived graph plus one level of provenance per vertex.
struct ProvenancedGraph {
  Graph graph;
  std::vector<Provenance> provenance;
};

/// One vertex per edge of g (canonical edge order); adjacent iff the edges
/// share an endpoint.
ProvenancedGraph line_graph(const Graph& g);

/// Vertices of g (same ids) followed by edges of g (canonical order).
/// Vertex-vertex: adjacent in g; edge-edge: share an endpoint;
/// vertex-edge: incident.
ProvenancedGraph total_graph(const Graph& g);

enum class Operator { kLine, kTotal };

inline constexpr std::size_t kDefaultMaxVertices = 20000;

/// k-fold application of `op`; k = 0 returns g. Before each step the order of
/// the next graph (m for line, n + m for total) is compared with
/// `max_vertices` and a ResourceError carrying the projected order is thrown
/// when it would be exceeded.
Graph iterate(const Graph& g, Operator op, std::size_t k, std::size_t max_vertices = kDefaultMaxVertices);

/// Like iterate, but keeps the provenance of the final application (k >= 1).
ProvenancedGraph iterate_provenanced(const Graph& g, Operator op, std::size_t k,
                                     std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace itg
