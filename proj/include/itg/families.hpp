#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "itg/graph.hpp"

namespace itg {

/// Named graph families. Vertex numbering is fixed: the path spine comes
/// first (v_1 -> 0, v_2 -> 1, ...), decorations follow.
enum class FamilyKind { kF1, kF2, kF3, kF4, kF5, kLollipop, kPath, kCycle, kComplete, kStar, kNamed };

struct PatternFamily {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<long long> params;
  std::string name;  // kNamed only: "petersen", "shrikhande", "rook44", ...

  Graph build() const;
  std::string to_string() const;
};

/// Parses the `name:params` mini-language: "f3:5", "lol:8,4", "k:6",
/// "p:4", "c:5", "s:5", or a bare named graph ("petersen").
PatternFamily parse_family(std::string_view spec);

/// Path v_1 ... v_{k+2}. k >= 0 accepted (k = 0, 1 used by recursions).
Graph build_f1(long long k);
/// F1^{k+1} plus the chord v_1 v_3. k >= 2.
Graph build_f2(long long k);
/// F2^k plus the chord v_{k+1} v_{k+3}. k >= 2.
Graph build_f3(long long k);
/// Path on k-1 vertices with two pendants at each end. k >= 3.
/// Vertices 0..k-2 spine, k-1,k pendants of v_1, k+1,k+2 pendants of v_{k-1}.
Graph build_f4(long long k);
/// Path on k+1 vertices with two pendants at v_{k+1}. k >= 1.
Graph build_f5(long long k);

/// Cycle on g vertices (0..g-1, attachment vertex 0) plus a pendant path
/// g..n-1 hanging off vertex 0. Requires g >= 3, n >= g.
Graph build_lollipop(long long n, long long g);

Graph build_path(long long n);      // n >= 1
Graph build_cycle(long long n);     // n >= 3
Graph build_complete(long long n);  // n >= 1
Graph build_star(long long n);      // n >= 1, centre is vertex 0

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Graph build_petersen();
/// Outer 5-cycle, inner pentagram, spokes.
Graph build_petersen_drawing();
/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph build_shrikhande();
/// K4 x K4 Cartesian product (4x4 rook's graph).
Graph build_rook(long long side);
Graph build_cube();                        // 3-cube Q3
Graph build_complete_bipartite(long long a, long long b);
/// K4 minus one edge (the "diamond").
Graph build_k4_minus_edge();

/// Named graphs accepted by parse_family.
std::vector<std::string> named_graphs();

}  // namespace itg
