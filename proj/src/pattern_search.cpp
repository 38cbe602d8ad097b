#include "itg/pattern_search.hpp"

#include <algorithm>
#include <string>

#include "itg/error.hpp"
#include "itg/families.hpp"

namespace itg {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, EmbeddingMode mode, const EmbeddingFilter& accept)
      : host_(host), pattern_(pattern), mode_(mode), accept_(accept) {
    order_ = placement_order();
    map_.assign(pattern.order(), 0);
    used_.assign(host.order(), false);
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (mode_ == EmbeddingMode::kSubgraph && pattern_.size() > host_.size()) return std::nullopt;
    if (extend(0)) return Embedding{map_, mode_};
    return std::nullopt;
  }

 private:
  // Highest-degree vertex first, then repeatedly the vertex with the most
  // already-placed neighbours; ties go to the lowest id.
  std::vector<Vertex> placement_order() const {
    const std::size_t k = pattern_.order();
    std::vector<Vertex> order;
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> links(k, 0);
    while (order.size() < k) {
      Vertex pick = 0;
      bool found = false;
      for (Vertex p = 0; p < k; ++p) {
        if (placed[p]) continue;
        if (!found || links[p] > links[pick] ||
            (links[p] == links[pick] && pattern_.degree(p) > pattern_.degree(pick))) {
          pick = p;
          found = true;
        }
      }
      placed[pick] = true;
      order.push_back(pick);
      for (Vertex q : pattern_.neighbors(pick)) ++links[q];
    }
    return order;
  }

  bool consistent(std::size_t depth, Vertex p, Vertex h) const {
    if (used_[h] || host_.degree(h) < pattern_.degree(p)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      const bool pattern_edge = pattern_.has_edge(p, q);
      const bool host_edge = host_.has_edge(h, map_[q]);
      if (pattern_edge && !host_edge) return false;
      if (mode_ == EmbeddingMode::kInduced && host_edge && !pattern_edge) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return !accept_ || accept_(map_);
    const Vertex p = order_[depth];
    // Candidates: neighbours of an already-mapped pattern neighbour, else all.
    std::optional<Vertex> anchor;
    for (std::size_t i = 0; i < depth && !anchor; ++i)
      if (pattern_.has_edge(p, order_[i])) anchor = map_[order_[i]];
    auto attempt = [&](Vertex h) {
      if (!consistent(depth, p, h)) return false;
      map_[p] = h;
      used_[h] = true;
      const bool done = extend(depth + 1);
      used_[h] = false;
      return done;
    };
    if (anchor) {
      for (Vertex h : host_.neighbors(*anchor))
        if (attempt(h)) return true;
    } else {
      for (Vertex h = 0; h < host_.order(); ++h)
        if (attempt(h)) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  EmbeddingMode mode_;
  const EmbeddingFilter& accept_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

// All simple paths with exactly `length` edges in a small graph.
std::vector<std::vector<Vertex>> simple_paths(const Graph& g, std::size_t length) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on(g.order(), false);
  std::function<void()> grow = [&] {
    if (path.size() == length + 1) {
      out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = true;
      path.push_back(w);
      grow();
      path.pop_back();
      on[w] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on[s] = true;
    path = {s};
    grow();
    on[s] = false;
  }
  return out;
}

}  // namespace

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, EmbeddingMode mode,
                                        const EmbeddingFilter& accept) {
  return EmbeddingSearch(host, pattern, mode, accept).run();
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return find_embedding(host, pattern, EmbeddingMode::kInduced);
}

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_embedding(host, pattern, EmbeddingMode::kSubgraph);
}

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.map.size() != pattern.order()) return false;
  std::vector<bool> seen(host.order(), false);
  for (Vertex h : e.map) {
    if (h >= host.order() || seen[h]) return false;
    seen[h] = true;
  }
  for (Vertex p = 0; p < pattern.order(); ++p) {
    for (Vertex q = p + 1; q < pattern.order(); ++q) {
      const bool pe = pattern.has_edge(p, q);
      const bool he = host.has_edge(e.map[p], e.map[q]);
      if (pe && !he) return false;
      if (e.mode == EmbeddingMode::kInduced && he && !pe) return false;
    }
  }
  return true;
}

void for_each_diameter_path(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit,
                            bool directed) {
  require_connected(g, "diameter path enumeration");
  const DistanceTable dist(g);
  const Distance d = dist.max();
  std::vector<Vertex> path;
  bool keep_going = true;
  // Walk from s towards t along vertices lying on some s-t geodesic.
  std::function<void(Vertex)> walk = [&](Vertex t) {
    const Vertex here = path.back();
    if (here == t) {
      keep_going = visit(path);
      return;
    }
    const Distance step = static_cast<Distance>(path.size());
    for (Vertex w : g.neighbors(here)) {
      if (!keep_going) return;
      if (dist(path.front(), w) == step && dist(w, t) == d - step) {
        path.push_back(w);
        walk(t);
        path.pop_back();
      }
    }
  };
  for (Vertex s = 0; s < g.order() && keep_going; ++s) {
    for (Vertex t = 0; t < g.order() && keep_going; ++t) {
      if (dist(s, t) != d || (!directed && t <= s) || s == t) continue;
      path = {s};
      walk(t);
    }
  }
}

std::vector<DiameterPath> diameter_paths(const Graph& g, std::size_t limit, bool directed) {
  std::vector<DiameterPath> out;
  if (limit == 0) return out;
  for_each_diameter_path(
      g,
      [&](std::span<const Vertex> p) {
        out.push_back(DiameterPath{{p.begin(), p.end()}});
        return out.size() < limit;
      },
      directed);
  return out;
}

bool is_diameter_path_family(const Graph& g, long long k) {
  require_connected(g, "diameter path test");
  return static_cast<long long>(diameter(g)) == k + 1;
}

std::optional<Embedding> find_lollipop_diameter_subgraph(const Graph& g, long long l, LollipopMode mode) {
  require_connected(g, "lollipop diameter subgraph search");
  const DistanceTable dist(g);
  const long long d = dist.max();
  if (l < 1 || l > d) {
    throw PreconditionError("lollipop parameter l=" + std::to_string(l) + " outside [1," + std::to_string(d) + "]");
  }
  const long long order = l + d + 1;
  const long long girth = 2 * l + 1;
  const Graph lollipop = build_lollipop(order, girth);

  if (mode == LollipopMode::kAnyDiameterPath) {
    const auto paths = simple_paths(lollipop, static_cast<std::size_t>(d));
    return find_embedding(g, lollipop, EmbeddingMode::kSubgraph, [&](std::span<const Vertex> map) {
      return std::any_of(paths.begin(), paths.end(), [&](const std::vector<Vertex>& p) {
        return dist(map[p.front()], map[p.back()]) == static_cast<Distance>(d);
      });
    });
  }

  // Anchored: walk each directed diameter path t = p_0 .. p_D = a, close the
  // cycle through a neighbour b of a with d(t, b) = D and a second geodesic
  // from w = p_{D-l} to b that avoids the path.
  const auto tail_len = static_cast<std::size_t>(d - l);
  std::optional<Embedding> found;
  std::vector<bool> on_path(g.order(), false);
  for_each_diameter_path(
      g,
      [&](std::span<const Vertex> p) {
        const Vertex t = p.front();
        const Vertex a = p.back();
        for (Vertex x : p) on_path[x] = true;
        std::vector<Vertex> back;  // b, ..., up to (excluding) w
        std::function<bool(Vertex, std::size_t)> descend = [&](Vertex x, std::size_t remaining) -> bool {
          back.push_back(x);
          if (remaining == 1) {
            if (g.has_edge(x, p[tail_len])) return true;
          } else {
            for (Vertex y : g.neighbors(x)) {
              if (on_path[y] || dist(t, y) + 1 != dist(t, x)) continue;
              if (descend(y, remaining - 1)) return true;
            }
          }
          back.pop_back();
          return false;
        };
        for (Vertex b : g.neighbors(a)) {
          if (on_path[b] || dist(t, b) != static_cast<Distance>(d)) continue;
          back.clear();
          if (!descend(b, static_cast<std::size_t>(l))) continue;
          Embedding e{std::vector<Vertex>(static_cast<std::size_t>(order)), EmbeddingMode::kSubgraph};
          for (std::size_t i = 0; i <= static_cast<std::size_t>(l); ++i) e.map[i] = p[tail_len + i];
          for (std::size_t i = 0; i < back.size(); ++i) e.map[static_cast<std::size_t>(l) + 1 + i] = back[i];
          for (std::size_t j = 0; j < tail_len; ++j) e.map[static_cast<std::size_t>(girth) + j] = p[tail_len - 1 - j];
          found = std::move(e);
          break;
        }
        for (Vertex x : p) on_path[x] = false;
        return !found.has_value();
      },
      /*directed=*/true);
  return found;
}

bool has_lollipop_diameter_subgraph(const Graph& g, long long l, LollipopMode mode) {
  return find_lollipop_diameter_subgraph(g, l, mode).has_value();
}

bool has_any_lollipop_diameter_subgraph(const Graph& g, LollipopMode mode) {
  require_connected(g, "lollipop diameter subgraph search");
  const long long d = diameter(g);
  for (long long l = 1; l <= d; ++l)
    if (has_lollipop_diameter_subgraph(g, l, mode)) return true;
  return false;
}

}  // namespace itg
