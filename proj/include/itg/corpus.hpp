#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

/// Largest order accepted by gen_connected_graphs.
inline constexpr std::size_t kExhaustiveLimit = 7;
/// Largest order accepted by gen_regular_graphs.
inline constexpr std::size_t kRegularLimit = 12;

/// All graphs on n vertices up to isomorphism (connected or not), in
/// canonical labelling, sorted by canonical certificate. n <= kExhaustiveLimit.
std::vector<Graph> gen_all_graphs(std::size_t n);

/// All connected graphs on n vertices up to isomorphism. Counts for
/// n = 1..7: 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> gen_connected_graphs(std::size_t n);

/// All r-regular graphs on n vertices up to isomorphism. Edges are added one
/// saturated vertex at a time and partial graphs are deduplicated by
/// canonical form after every step; r > (n-1)/2 goes through complements.
std::vector<Graph> gen_regular_graphs(std::size_t n, std::size_t r, bool connected_only = true);

/// Connected regular graphs of every degree for orders lo..hi.
std::vector<Graph> gen_regular_corpus(std::size_t lo, std::size_t hi);

/// Named regular graphs: Petersen, 3-cube, Shrikhande, 4x4 rook.
std::vector<Graph> named_regular_graphs();

struct Corpus {
  std::string descriptor;
  std::vector<Graph> graphs;
};

/// Builds a corpus from a descriptor. Parts are joined with '+':
///   gen:N, gen:A..B        connected graphs by order
///   regular:N, regular:A..B connected regular graphs by order
///   named                  named_regular_graphs()
///   family:SPEC            one graph from the family mini-language
///   file:PATH              graph6 lines or one edge list
Corpus load_corpus(std::string_view descriptor);

}  // namespace itg
