#include "itg/graph.hpp"

#include <algorithm>
#include <string>

#include "itg/error.hpp"

namespace itg {

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v) {
  if (u >= n || v >= n) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside [0," + std::to_string(n) + ")");
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  EdgeList edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    check_pair(n, u, v);
    edges.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> deg;
  deg.reserve(adj_.size());
  for (const auto& row : adj_) deg.push_back(row.size());
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw PreconditionError("bfs source " + std::to_string(source) + " out of range");
  }
  std::vector<Distance> dist(g.order(), kInfinity);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()), dist_(n_ * n_, kInfinity) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    for (Distance d : row) max_ = std::max(max_, d);
  }
}

Distance diameter(const Graph& g) {
  Distance best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Distance d : bfs_distances(g, s)) {
      if (d == kInfinity) return kInfinity;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kInfinity; });
}

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edges(vertices.size(), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw PreconditionError("relabel: permutation size mismatch");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.order(), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

}  // namespace itg
