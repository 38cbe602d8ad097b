#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace itg {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Marker for "no path" in distance tables and for the diameter of a
/// disconnected graph.
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// An undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Lexicographically sorted, deduplicated edge sequence.
using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted ascending; the canonical edge order (lexicographic
/// on (u, v) with u < v) is what `edges()` returns and what every derived
/// construction (line graph, total graph, incidence matrix) indexes by.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary pairs; (u, v) and (v, u) collapse to one
  /// edge. Throws GraphError on an endpoint >= n or a self-loop.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  const EdgeList& edges() const noexcept { return edges_; }

  /// Index of edge {u, v} in `edges()`, if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  std::vector<std::size_t> degree_sequence() const;  // descending

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  EdgeList edges_;
};

/// Hop distances from `source`; unreachable vertices get kInfinity.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Row-major n x n table of pairwise hop distances.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

  /// Largest entry; kInfinity when some pair is disconnected, 0 for n <= 1.
  Distance max() const noexcept { return max_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  Distance max_ = 0;
};

/// Maximum pairwise distance; kInfinity iff disconnected; 0 for n <= 1
/// (including the empty graph).
Distance diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Common degree when every vertex has the same degree.
std::optional<std::size_t> is_regular(const Graph& g);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph complement(const Graph& g);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace itg
