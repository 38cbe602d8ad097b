#include "itg/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "itg/error.hpp"

namespace itg {

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

struct Overflow {};

// 128-bit integer with every operation overflow-checked.
struct Checked {
  Int128 v = 0;
  Checked() = default;
  Checked(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)
  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  Checked& operator+=(Checked b) { return *this = *this + b; }
  friend Checked operator-(Checked a) {
    Checked r;
    if (__builtin_sub_overflow(static_cast<Int128>(0), a.v, &r.v)) throw Overflow{};
    return r;
  }
  Checked exact_div(long long k) const {
    if (v % k != 0) throw Error("char_poly: inexact division in Faddeev-LeVerrier");
    Checked r;
    r.v = v / k;
    return r;
  }
  BigInt to_big() const {
    // Split into two 64-bit halves.
    const bool negative = v < 0;
    UInt128 u = negative ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    BigInt out = (hi << 64) + lo;
    return negative ? BigInt(-out) : out;
  }
};

BigInt exact_div(const BigInt& value, long long k) {
  BigInt q;
  BigInt kk = static_cast<long>(k);
  if (!mpz_divisible_p(value.get_mpz_t(), kk.get_mpz_t())) {
    throw Error("char_poly: inexact division in Faddeev-LeVerrier");
  }
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), kk.get_mpz_t());
  return q;
}

template <typename T>
T from_ll(long long x) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return BigInt(static_cast<long>(x));
  } else {
    return T(x);
  }
}

Checked exact_div(const Checked& value, long long k) { return value.exact_div(k); }
BigInt to_big(const BigInt& x) { return x; }
BigInt to_big(const Checked& x) { return x.to_big(); }

template <typename T>
CharPoly faddeev_leverrier(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("char_poly requires a square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  // Sparse rows of A: (column, value) for non-zero entries.
  std::vector<std::vector<std::pair<std::size_t, long long>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0)
        rows[i].emplace_back(j, a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));

  std::vector<T> coeff(n + 1);
  coeff[0] = from_ll<T>(1);
  std::vector<T> m(n * n, from_ll<T>(0));  // M_0 = 0
  std::vector<T> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{k-1} I
    for (std::size_t i = 0; i < n; ++i) {
      T* out = &am[i * n];
      std::fill(out, out + n, from_ll<T>(0));
      for (auto [j, value] : rows[i]) {
        const T* src = &m[j * n];
        const T factor = from_ll<T>(value);
        for (std::size_t c = 0; c < n; ++c) out[c] += factor * src[c];
      }
    }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += coeff[k - 1];
    std::swap(m, am);
    // c_k = -tr(A M_k) / k
    T trace = from_ll<T>(0);
    for (std::size_t i = 0; i < n; ++i)
      for (auto [j, value] : rows[i]) trace += from_ll<T>(value) * m[j * n + i];
    coeff[k] = exact_div(-trace, static_cast<long long>(k));
  }
  CharPoly p;
  p.coefficients.reserve(n + 1);
  for (const T& c : coeff) p.coefficients.push_back(to_big(c));
  return p;
}

// ---- exact rational polynomials (ascending coefficients) -------------------

using Rational = mpq_class;
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b (b non-zero).
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

int sign_at(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

class SturmChain {
 public:
  explicit SturmChain(const Poly& f) {
    chain_.push_back(f);
    Poly d = derivative(f);
    if (!d.empty()) chain_.push_back(d);
    while (chain_.size() >= 2 && chain_.back().size() > 1) {
      Poly r = divide(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<Poly> chain_;
};

void isolate(const SturmChain& chain, Rational lo, Rational hi, int roots, const Rational& width,
             std::vector<double>& out) {
  if (roots == 0) return;
  if (roots == 1 && hi - lo <= width) {
    out.push_back(Rational((lo + hi) / 2).get_d());
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = chain.count(lo, mid);
  isolate(chain, lo, mid, left, width, out);
  isolate(chain, mid, hi, roots - left, width, out);
}

}  // namespace

CharPoly char_poly(const IntMatrix& m, bool* used_big_integers) {
  try {
    CharPoly p = faddeev_leverrier<Checked>(m);
    if (used_big_integers) *used_big_integers = false;
    return p;
  } catch (const Overflow&) {
    if (used_big_integers) *used_big_integers = true;
    return faddeev_leverrier<BigInt>(m);
  }
}

CharPoly char_poly_big(const IntMatrix& m) { return faddeev_leverrier<BigInt>(m); }

std::string CharPoly::to_string() const {
  std::ostringstream out;
  const std::size_t n = degree();
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const BigInt& c = coefficients[i];
    if (c == 0) continue;
    const std::size_t power = n - i;
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || power == 0) out << magnitude.get_str();
    if (power >= 1) out << "x";
    if (power >= 2) out << "^" << power;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::vector<double> real_roots(const CharPoly& p, double tolerance) {
  Poly f;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) f.emplace_back(*it);
  trim(f);
  if (f.size() <= 1) return {};

  // Yun's square-free decomposition: f = prod factor_i^i.
  std::vector<std::pair<Poly, std::size_t>> factors;
  Poly df = derivative(f);
  Poly a0 = gcd(f, df);
  Poly b = divide(f, a0).first;
  Poly c = divide(df, a0).first;
  Poly d = subtract(c, derivative(b));
  for (std::size_t i = 1; b.size() > 1; ++i) {
    Poly a = gcd(b, d);
    if (a.size() > 1) factors.emplace_back(a, i);
    b = divide(b, a).first;
    c = divide(d, a).first;
    d = subtract(c, derivative(b));
  }

  std::vector<double> roots;
  const Rational width(tolerance);
  for (const auto& [factor, multiplicity] : factors) {
    // Cauchy bound on root magnitude.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < factor.size(); ++i) bound = std::max(bound, Rational(abs(factor[i] / factor.back())));
    bound += 1;
    const SturmChain chain(factor);
    std::vector<double> found;
    isolate(chain, -bound, bound, chain.count(-bound, bound), width, found);
    for (double r : found)
      for (std::size_t i = 0; i < multiplicity; ++i) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace itg
