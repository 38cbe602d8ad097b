#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <Eigen/Core>

namespace itg {

using BigInt = mpz_class;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// det(xI - M) with exact integer coefficients, highest degree first:
/// coefficients[0] = 1 is the x^n coefficient, coefficients[n] the constant.
struct CharPoly {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Faddeev-LeVerrier recursion. Runs in overflow-checked 128-bit integers
/// and restarts in GMP arbitrary precision if any intermediate overflows.
/// `used_big_integers`, when given, reports which path produced the result.
CharPoly char_poly(const IntMatrix& m, bool* used_big_integers = nullptr);

/// Same recursion forced onto arbitrary precision.
CharPoly char_poly_big(const IntMatrix& m);

/// All real roots with multiplicity, descending, each within `tolerance`.
/// Square-free decomposition (Yun) and Sturm-sequence bisection over exact
/// rationals. Complex roots are not reported.
std::vector<double> real_roots(const CharPoly& p, double tolerance = 1e-12);

}  // namespace itg
