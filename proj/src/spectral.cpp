#include "itg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "itg/error.hpp"
#include "itg/isomorphism.hpp"

namespace itg {

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(g.size()));
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Edge& e = g.edges()[j];
    m(e.u, static_cast<Eigen::Index>(j)) = 1;
    m(e.v, static_cast<Eigen::Index>(j)) = 1;
  }
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return m;
}

IntMatrix signless_laplacian(const Graph& g) {
  IntMatrix m = adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = static_cast<long long>(g.degree(v));
  return m;
}

IntMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  return kind == MatrixKind::kAdjacency ? adjacency_matrix(g) : signless_laplacian(g);
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<std::pair<double, std::size_t>> Spectrum::grouped(double relative_tolerance) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double x : values) {
    if (!out.empty() && std::abs(out.back().first - x) <= relative_tolerance * std::max(1.0, std::abs(x))) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

Spectrum make_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values)};
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a.values[i];
    const double y = b.values[i];
    if (std::abs(x - y) > tolerance * (1.0 + std::max(std::abs(x), std::abs(y)))) return false;
  }
  return true;
}

Spectrum eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return make_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

Spectrum eigenvalues(const IntMatrix& m) { return eigenvalues(Eigen::MatrixXd(m.cast<double>())); }

Spectrum adjacency_spectrum(const Graph& g) { return eigenvalues(adjacency_matrix(g)); }
Spectrum q_spectrum(const Graph& g) { return eigenvalues(signless_laplacian(g)); }

double energy_from_q_spectrum(const Spectrum& q) {
  // Q is positive semidefinite. Values inside the eigensolver's backward
  // error are zeros; sqrt would inflate 1e-16 noise to 1e-8.
  const double scale = q.size() ? std::max(1.0, std::abs(q.values.front())) : 1.0;
  const double noise = 16.0 * static_cast<double>(q.size()) * std::numeric_limits<double>::epsilon() * scale;
  double total = 0.0;
  for (double x : q.values) total += x <= noise ? 0.0 : std::sqrt(x);
  return total;
}

double incidence_energy(const Graph& g) { return energy_from_q_spectrum(q_spectrum(g)); }

namespace {

// sqrt(4x + r^2 + 4). The radicand vanishes at x = -r when r = 2, where the
// square root would magnify eigenvalue rounding to ~sqrt(eps); values within
// rounding distance of zero are taken as zero.
double branch_root(double x, double r) {
  const double radicand = 4.0 * x + r * r + 4.0;
  if (radicand <= 64.0 * std::numeric_limits<double>::epsilon() * (r * r + 4.0)) return 0.0;
  return std::sqrt(radicand);
}

}  // namespace

double total_branch_plus(double x, double r) { return (2.0 * x + r - 2.0 + branch_root(x, r)) / 2.0; }

double total_branch_minus(double x, double r) { return (2.0 * x + r - 2.0 - branch_root(x, r)) / 2.0; }

namespace {

std::size_t extra_multiplicity(const Spectrum& adjacency, std::size_t n, std::size_t r) {
  if (adjacency.size() != n) {
    throw PreconditionError("spectrum has " + std::to_string(adjacency.size()) + " values, expected n=" +
                            std::to_string(n));
  }
  if (r < 2) throw PreconditionError("total-graph spectrum formula requires r >= 2 (got r=" + std::to_string(r) + ")");
  if ((n * (r - 2)) % 2 != 0) throw PreconditionError("n(r-2)/2 is not an integer");
  return n * (r - 2) / 2;
}

}  // namespace

Spectrum total_adjacency_spectrum_formula(const Spectrum& adjacency, std::size_t n, std::size_t r) {
  const std::size_t extra = extra_multiplicity(adjacency, n, r);
  std::vector<double> out;
  out.reserve(2 * n + extra);
  const auto rr = static_cast<double>(r);
  for (double x : adjacency.values) {
    out.push_back(total_branch_plus(x, rr));
    out.push_back(total_branch_minus(x, rr));
  }
  out.insert(out.end(), extra, -2.0);
  return make_spectrum(std::move(out));
}

Spectrum total_q_spectrum_formula(const Spectrum& adjacency, std::size_t n, std::size_t r) {
  const std::size_t extra = extra_multiplicity(adjacency, n, r);
  std::vector<double> out;
  out.reserve(2 * n + extra);
  const auto rr = static_cast<double>(r);
  for (double x : adjacency.values) {
    const double root = branch_root(x, rr);
    out.push_back((5.0 * rr + 2.0 * x - 2.0 + root) / 2.0);
    out.push_back((5.0 * rr + 2.0 * x - 2.0 - root) / 2.0);
  }
  out.insert(out.end(), extra, 2.0 * rr - 2.0);
  return make_spectrum(std::move(out));
}

EnergyBounds ie_total_bounds(double n, double r) {
  if (n < 1 || r < 1) throw DomainError("ie_total_bounds requires n >= 1 and r >= 1");
  const double shared = n * (r - 2.0) * std::sqrt(2.0 * r - 2.0) / 2.0;
  EnergyBounds b;
  b.upper = shared + 2.0 * n * std::sqrt(r) + (n - 1.0) * std::sqrt(3.0 * r - 2.0);
  b.lower = shared + (n + 1.0) * std::sqrt(r) + std::sqrt(3.0 * r - 2.0) + (n - 1.0) * std::sqrt(2.0 * r - 2.0);
  return b;
}

EnergyBounds ie_total_bounds_consecutive(double n_k, double r_k, double n_prev, double r_prev) {
  if (r_k < 2 || r_prev < 1 || n_prev < 1) throw DomainError("ie_total_bounds_consecutive: degrees too small");
  const double head = (n_k - 2.0 * n_prev) * std::sqrt(r_k - 2.0);
  EnergyBounds b;
  b.upper = head + n_prev * std::sqrt(2.0 * r_k) + (n_prev - 1.0) * std::sqrt(r_k + r_prev - 2.0);
  b.lower = head + (n_prev + 1.0) * std::sqrt(r_prev) + std::sqrt(r_k + r_prev - 2.0) +
            (n_prev - 1.0) * std::sqrt(r_k - 2.0);
  return b;
}

double ie_line_bound(double n, double r) {
  const double first = 2.0 * r - 4.0;
  const double last = (n - 1.0) * ((3.0 * r - 4.0) * (n - 1.0) - r);
  if (first < 0 || 4.0 * r - 4.0 < 0 || last < 0) {
    throw DomainError("ie_line_bound undefined for n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                      " (negative radicand)");
  }
  return n * (r - 2.0) / 2.0 * std::sqrt(first) + std::sqrt(4.0 * r - 4.0) + std::sqrt(last);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("regular iterate parameters overflow 64 bits");
  return out;
}

}  // namespace

RegularIterateParams regular_iterate_params(std::uint64_t n0, std::uint64_t r0, std::size_t k, Operator op) {
  if (r0 < 1) throw DomainError("regular_iterate_params requires r0 >= 1");
  if (k >= 62) throw DomainError("regular_iterate_params: k too large");
  RegularIterateParams p{op, n0, r0, k, {}, {}};
  for (std::size_t i = 0; i <= k; ++i) {
    const std::uint64_t pow = std::uint64_t{1} << i;
    long double degree = 0;
    std::uint64_t numerator = n0;
    if (op == Operator::kTotal) {
      degree = static_cast<long double>(pow) * r0;
      for (std::size_t j = 0; j < i; ++j) numerator = checked_mul(numerator, (std::uint64_t{1} << j) * r0 + 2);
    } else {
      // r_i = 2^i r0 - 2^{i+1} + 2 may be negative for r0 = 1.
      degree = static_cast<long double>(pow) * r0 - 2.0L * pow + 2.0L;
      for (std::size_t j = 0; j < i; ++j) {
        const long double rj = static_cast<long double>(p.degrees[j]);
        numerator = checked_mul(numerator, static_cast<std::uint64_t>(rj));
      }
    }
    if (degree < 0) {
      throw DomainError("iterate " + std::to_string(i) + " has negative degree; the closed form is undefined");
    }
    if (numerator % pow != 0) throw DomainError("closed-form order is not an integer");
    p.orders.push_back(numerator / pow);
    p.degrees.push_back(static_cast<std::uint64_t>(degree));
  }
  return p;
}

CospectralCertificate cospectral_certificate(const Graph& a, const Graph& b, MatrixKind kind) {
  CospectralCertificate c;
  c.poly_a = char_poly(graph_matrix(a, kind));
  c.poly_b = char_poly(graph_matrix(b, kind));
  c.cospectral = c.poly_a == c.poly_b;
  c.isomorphic = isomorphic(a, b);
  return c;
}

}  // namespace itg
