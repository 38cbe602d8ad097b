#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

/// Upper-triangle adjacency bits of a graph under its canonical labelling.
/// Equal certificates <=> isomorphic graphs.
struct Certificate {
  std::size_t order = 0;
  std::vector<std::uint64_t> bits;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept;
};

/// Colour refinement (1-dimensional Weisfeiler-Leman) starting from `colors`.
/// Returns colours 0..k-1 forming the coarsest equitable refinement; the
/// numbering depends only on the isomorphism class of (graph, colouring).
std::vector<std::uint32_t> refine_colors(const Graph& g, std::vector<std::uint32_t> colors);

/// canonical_labeling(g)[v] is the position of v in the canonical order.
/// Individualization-refinement search, leaves compared as adjacency bit
/// strings (maximum wins), automorphisms found at equal leaves prune
/// siblings in the same orbit of the path's pointwise stabiliser.
/// Practical to a few hundred vertices for graphs whose refinement is
/// informative; worst case exponential.
std::vector<Vertex> canonical_labeling(const Graph& g);

Certificate canonical_certificate(const Graph& g);

/// Exact isomorphism test: order/size/degree screening, refined-partition
/// screening, then canonical certificates.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace itg
