#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "itg/charpoly.hpp"
#include "itg/graph.hpp"
#include "itg/transforms.hpp"

namespace itg {

enum class MatrixKind { kAdjacency, kSignlessLaplacian };

/// n x m incidence matrix, columns in canonical edge order.
IntMatrix incidence_matrix(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);
/// Q = D + A.
IntMatrix signless_laplacian(const Graph& g);
IntMatrix graph_matrix(const Graph& g, MatrixKind kind);

/// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double sum() const;
  /// (value, multiplicity) groups for display, merging values within
  /// `relative_tolerance` of each other.
  std::vector<std::pair<double, std::size_t>> grouped(double relative_tolerance = 1e-6) const;
};

Spectrum make_spectrum(std::vector<double> values);

/// Elementwise comparison of sorted spectra with
/// |a - b| <= tolerance * (1 + max(|a|, |b|)).
bool spectra_match(const Spectrum& a, const Spectrum& b, double tolerance = 1e-8);

/// Symmetric eigensolver (Householder tridiagonalisation + implicit QR).
Spectrum eigenvalues(const IntMatrix& m);
Spectrum eigenvalues(const Eigen::MatrixXd& m);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum q_spectrum(const Graph& g);

/// Sum of sqrt(q_i) over a signless-Laplacian spectrum. Values within the
/// eigensolver's rounding of zero (either sign) count as zero.
double energy_from_q_spectrum(const Spectrum& q);
double incidence_energy(const Graph& g);

/// Adjacency spectrum of T(G) from the adjacency spectrum of a connected
/// r-regular G on n vertices: (2x + r - 2 ± sqrt(4x + r^2 + 4)) / 2 for each
/// eigenvalue x, plus -2 with multiplicity n(r-2)/2. Requires r >= 2 and
/// n(r-2) even.
Spectrum total_adjacency_spectrum_formula(const Spectrum& adjacency, std::size_t n, std::size_t r);

/// Signless-Laplacian spectrum of T(G): (5r + 2x - 2 ± sqrt(4x + r^2 + 4)) / 2
/// for each adjacency eigenvalue x of G, plus 2r - 2 with multiplicity
/// n(r-2)/2.
Spectrum total_q_spectrum_formula(const Spectrum& adjacency, std::size_t n, std::size_t r);

/// The two branches (2x + r - 2 ± sqrt(4x + r^2 + 4)) / 2.
double total_branch_plus(double x, double r);
double total_branch_minus(double x, double r);

struct EnergyBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on IE(T(G)) for an r-regular G of order n:
///   upper = n(r-2)sqrt(2r-2)/2 + 2n sqrt(r) + (n-1) sqrt(3r-2)   (strict)
///   lower = n(r-2)sqrt(2r-2)/2 + (n+1) sqrt(r) + sqrt(3r-2) + (n-1) sqrt(2r-2)
EnergyBounds ie_total_bounds(double n, double r);

/// The same bounds for IE(T^k(G)) written with the orders and degrees of two
/// consecutive iterates (n_k, r_k of T^k and n_{k-1}, r_{k-1} of T^{k-1}).
EnergyBounds ie_total_bounds_consecutive(double n_k, double r_k, double n_prev, double r_prev);

/// Upper bound on IE(L(H)) for an r-regular H of order n:
///   n(r-2)/2 sqrt(2r-4) + sqrt(4r-4) + sqrt((n-1)[(3r-4)(n-1) - r]).
/// Throws DomainError on a negative radicand.
double ie_line_bound(double n, double r);

/// Orders and degrees of the regular iterates T^i(G) or L^i(G), i = 0..k.
struct RegularIterateParams {
  Operator op = Operator::kTotal;
  std::uint64_t n0 = 0;
  std::uint64_t r0 = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> orders;   // orders[i] = n_i
  std::vector<std::uint64_t> degrees;  // degrees[i] = r_i

  std::uint64_t n() const { return orders.back(); }
  std::uint64_t r() const { return degrees.back(); }
};

/// Closed forms. Total: r_i = 2^i r_0, n_i = (n_0 / 2^i) prod_{j<i} (2^j r_0 + 2).
/// Line: r_i = 2^i r_0 - 2^{i+1} + 2, n_i = (n_0 / 2^i) prod_{j<i} r_j.
/// Throws DomainError if a value is not a non-negative integer or overflows
/// 64 bits.
RegularIterateParams regular_iterate_params(std::uint64_t n0, std::uint64_t r0, std::size_t k, Operator op);

struct CospectralCertificate {
  bool cospectral = false;
  bool isomorphic = false;
  CharPoly poly_a;
  CharPoly poly_b;

  /// Cospectral but not isomorphic.
  bool certified_pair() const { return cospectral && !isomorphic; }
};

/// Exact characteristic-polynomial comparison plus an exact isomorphism test.
CospectralCertificate cospectral_certificate(const Graph& a, const Graph& b, MatrixKind kind);

}  // namespace itg
