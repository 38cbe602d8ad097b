#include "itg/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace itg {

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(c.order);
  for (std::uint64_t w : c.bits) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

// Re-rank arbitrary keys to dense colours 0..k-1 in key order.
template <typename Key>
std::vector<std::uint32_t> rank(const std::vector<Key>& keys, std::size_t* classes) {
  std::vector<Vertex> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> colors(keys.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++next;
    colors[order[i]] = next;
  }
  *classes = keys.empty() ? 0 : next + 1;
  return colors;
}

std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex find(Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
  std::vector<Vertex> parent;
};

template <typename Label>
Certificate certificate_from_labeling(const Graph& g, const std::vector<Label>& position) {
  const std::size_t n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[position[v]] = v;
  Certificate cert;
  cert.order = n;
  cert.bits.assign((n * (n - (n > 0 ? 1 : 0)) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (g.has_edge(at[i], at[j])) cert.bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
  return cert;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    std::vector<Vertex> path;
    visit(refine_colors(g_, std::vector<std::uint32_t>(n_, 0)), path);
    return best_labeling_;
  }

 private:
  Certificate leaf_certificate(const std::vector<std::uint32_t>& colors) const {
    return certificate_from_labeling(g_, colors);
  }

  void record_leaf(const std::vector<std::uint32_t>& colors) {
    Certificate cert = leaf_certificate(colors);
    if (!best_ || cert > *best_) {
      best_ = std::move(cert);
      best_labeling_.assign(colors.begin(), colors.end());
      return;
    }
    if (cert == *best_) {
      // Same leaf certificate: position-wise map gives an automorphism.
      std::vector<Vertex> best_at(n_);
      for (Vertex v = 0; v < n_; ++v) best_at[best_labeling_[v]] = v;
      std::vector<Vertex> sigma(n_);
      for (Vertex v = 0; v < n_; ++v) sigma[v] = best_at[colors[v]];
      bool identity = true;
      for (Vertex v = 0; v < n_ && identity; ++v) identity = sigma[v] == v;
      if (!identity) generators_.push_back(std::move(sigma));
    }
  }

  // Orbits of the group generated by stored generators fixing `path`
  // pointwise.
  UnionFind stabiliser_orbits(const std::vector<Vertex>& path) const {
    UnionFind uf(n_);
    for (const auto& sigma : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex x) { return sigma[x] == x; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, sigma[v]);
    }
    return uf;
  }

  void visit(const std::vector<std::uint32_t>& colors, std::vector<Vertex>& path) {
    const std::size_t classes = count_classes(colors);
    if (classes == n_) {
      record_leaf(colors);
      return;
    }
    // Target cell: smallest non-singleton cell, lowest colour on ties.
    std::vector<std::size_t> sizes(classes, 0);
    for (std::uint32_t c : colors) ++sizes[c];
    std::uint32_t target = 0;
    std::size_t target_size = n_ + 1;
    for (std::uint32_t c = 0; c < classes; ++c) {
      if (sizes[c] > 1 && sizes[c] < target_size) {
        target = c;
        target_size = sizes[c];
      }
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<Vertex> explored;
    for (Vertex x : cell) {
      if (!explored.empty()) {
        UnionFind orbits = stabiliser_orbits(path);
        const Vertex root = orbits.find(x);
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex y) { return orbits.find(y) == root; })) {
          continue;
        }
      }
      explored.push_back(x);
      std::vector<std::uint32_t> split(n_);
      for (Vertex v = 0; v < n_; ++v) split[v] = 2 * colors[v] + ((colors[v] == target && v != x) ? 1 : 0);
      std::size_t unused = 0;
      path.push_back(x);
      visit(refine_colors(g_, rank(split, &unused)), path);
      path.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::optional<Certificate> best_;
  std::vector<Vertex> best_labeling_;
  std::vector<std::vector<Vertex>> generators_;
};

std::vector<std::size_t> cell_sizes(const std::vector<std::uint32_t>& colors) {
  std::vector<std::size_t> sizes(count_classes(colors), 0);
  for (std::uint32_t c : colors) ++sizes[c];
  return sizes;
}

}  // namespace

std::vector<std::uint32_t> refine_colors(const Graph& g, std::vector<std::uint32_t> colors) {
  const std::size_t n = g.order();
  std::size_t classes = 0;
  colors = rank(colors, &classes);
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> keys(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& [own, around] = keys[v];
      own = colors[v];
      around.clear();
      for (Vertex w : g.neighbors(v)) around.push_back(colors[w]);
      std::sort(around.begin(), around.end());
    }
    std::size_t next_classes = 0;
    auto next = rank(keys, &next_classes);
    if (next_classes == classes) return colors;
    colors = std::move(next);
    classes = next_classes;
  }
}

std::vector<Vertex> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

Certificate canonical_certificate(const Graph& g) {
  return certificate_from_labeling(g, canonical_labeling(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  const auto ca = refine_colors(a, std::vector<std::uint32_t>(a.order(), 0));
  const auto cb = refine_colors(b, std::vector<std::uint32_t>(b.order(), 0));
  if (cell_sizes(ca) != cell_sizes(cb)) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace itg
