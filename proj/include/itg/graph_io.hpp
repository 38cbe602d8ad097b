#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

/// Largest order representable by each graph6 size class.
inline constexpr std::size_t kGraph6SmallMax = 62;
inline constexpr std::size_t kGraph6MediumMax = 258047;
inline constexpr std::size_t kGraph6LargeMax = 68719476735ULL;

/// Decodes one graph6 line (no trailing newline required; a leading
/// ">>graph6<<" header is accepted). Supports all three size classes.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6 without a header or newline.
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads every graph in a stream. Lines starting with a digit select the
/// edge-list format for the whole stream; otherwise each non-empty line is a
/// graph6 string.
std::vector<Graph> read_graphs(std::istream& in);

/// Parses a single graph from text in either format.
Graph parse_graph(std::string_view text);

}  // namespace itg
