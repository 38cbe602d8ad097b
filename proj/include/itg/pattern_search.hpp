#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

enum class EmbeddingMode {
  kInduced,   // pattern edge <=> host edge on mapped pairs
  kSubgraph,  // pattern edge  => host edge
};

/// Injective map from pattern vertex ids to host vertex ids.
struct Embedding {
  std::vector<Vertex> map;
  EmbeddingMode mode = EmbeddingMode::kInduced;
};

/// Called with each complete candidate map; return true to accept it.
using EmbeddingFilter = std::function<bool(std::span<const Vertex>)>;

/// First embedding (ascending host ids, deterministic pattern order) that
/// satisfies `mode` and `accept`. Backtracking with degree and adjacency
/// pruning; intended for hosts of up to a few dozen vertices.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, EmbeddingMode mode,
                                        const EmbeddingFilter& accept = {});

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);
std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern);

/// Replays `e` against the host adjacency and checks injectivity and the
/// edge condition of its mode.
bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// A shortest path whose length equals diam(G).
struct DiameterPath {
  std::vector<Vertex> vertices;
};

/// Visits every shortest path between every pair at distance diam(g).
/// Undirected enumeration visits each pair once (first endpoint smaller);
/// directed enumeration visits both orientations. Stops early when `visit`
/// returns false. Throws PreconditionError for disconnected input.
void for_each_diameter_path(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit,
                            bool directed = false);

std::vector<DiameterPath> diameter_paths(const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                         bool directed = false);

/// True iff F1^k (a path on k+2 vertices) is a diameter path of g, i.e.
/// diam(g) = k + 1.
bool is_diameter_path_family(const Graph& g, long long k);

enum class LollipopMode {
  /// The lollipop's tail end is at distance diam(G) from both endpoints of
  /// the cycle edge opposite the attachment vertex, so both tail-to-antipode
  /// routes are diameter paths of G.
  kAnchored,
  /// Any embedding whose image contains some diameter path of G.
  kAnyDiameterPath,
};

/// Looks for Lol_{l+D+1, 2l+1} (D = diam(g)) as a diameter subgraph of g.
/// The returned embedding uses build_lollipop's numbering. Requires g
/// connected and 1 <= l <= D.
std::optional<Embedding> find_lollipop_diameter_subgraph(const Graph& g, long long l,
                                                         LollipopMode mode = LollipopMode::kAnchored);

bool has_lollipop_diameter_subgraph(const Graph& g, long long l, LollipopMode mode = LollipopMode::kAnchored);

/// True when some l in [1, diam(g)] gives a lollipop diameter subgraph.
bool has_any_lollipop_diameter_subgraph(const Graph& g, LollipopMode mode = LollipopMode::kAnchored);

}  // namespace itg
