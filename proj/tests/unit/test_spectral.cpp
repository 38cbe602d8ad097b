#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/SVD>

#include "itg/corpus.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/spectral.hpp"
#include "itg/transforms.hpp"

using namespace itg;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Spectrum spectrum_of(std::vector<double> v) { return make_spectrum(std::move(v)); }

}  // namespace

TEST(Matrices, Factorizations) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : gen_connected_graphs(n)) {
      const IntMatrix inc = incidence_matrix(g);
      ASSERT_EQ(inc.rows(), static_cast<Eigen::Index>(g.order()));
      ASSERT_EQ(inc.cols(), static_cast<Eigen::Index>(g.size()));
      ASSERT_EQ(IntMatrix(inc * inc.transpose()), signless_laplacian(g));
      const IntMatrix lhs = inc.transpose() * inc;
      const IntMatrix rhs = IntMatrix(2 * IntMatrix::Identity(inc.cols(), inc.cols())) +
                            adjacency_matrix(line_graph(g).graph);
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(Matrices, SignlessLaplacianIsDegreePlusAdjacency) {
  const Graph g = build_lollipop(6, 4);
  const IntMatrix q = signless_laplacian(g);
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(q(v, v), static_cast<long long>(g.degree(v)));
  EXPECT_EQ(IntMatrix(q - adjacency_matrix(g)).sum(), static_cast<long long>(2 * g.size()));
}

TEST(Spectrum, MatchAndGrouping) {
  const Spectrum a = spectrum_of({1.0, 3.0, 2.0});
  EXPECT_EQ(a.values, (std::vector<double>{3.0, 2.0, 1.0}));
  EXPECT_DOUBLE_EQ(a.sum(), 6.0);
  EXPECT_TRUE(spectra_match(a, spectrum_of({3.0 + 1e-10, 2.0, 1.0})));
  EXPECT_FALSE(spectra_match(a, spectrum_of({3.0 + 1e-6, 2.0, 1.0})));
  EXPECT_FALSE(spectra_match(a, spectrum_of({3.0, 2.0})));
  const auto groups = q_spectrum(build_complete(4)).grouped();
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_NEAR(groups[0].first, 6.0, 1e-9);
  EXPECT_EQ(groups[0].second, 1u);
  EXPECT_NEAR(groups[1].first, 2.0, 1e-9);
  EXPECT_EQ(groups[1].second, 3u);
}

TEST(IncidenceEnergy, Examples) {
  EXPECT_NEAR(incidence_energy(build_complete(3)), 4.0, 1e-9);
  EXPECT_NEAR(incidence_energy(build_complete(2)), kSqrt2, 1e-12);
  EXPECT_NEAR(incidence_energy(total_graph(build_complete(3)).graph), 6.0 + 4.0 * kSqrt2, 1e-9);
  EXPECT_NEAR(incidence_energy(total_graph(build_complete(2)).graph), 4.0, 1e-9);
  EXPECT_DOUBLE_EQ(incidence_energy(Graph::from_edges(3, {})), 0.0);
}

// IE is the sum of singular values of the incidence matrix.
TEST(IncidenceEnergy, EqualsSingularValueSum) {
  for (const Graph& g : gen_connected_graphs(6)) {
    const Eigen::MatrixXd inc = incidence_matrix(g).cast<double>();
    const double sum = Eigen::JacobiSVD<Eigen::MatrixXd>(inc).singularValues().sum();
    ASSERT_NEAR(incidence_energy(g), sum, 1e-9);
  }
}

TEST(TotalSpectrumFormula, C4Literal) {
  const Graph c4 = build_cycle(4);
  const Spectrum f = total_adjacency_spectrum_formula(adjacency_spectrum(c4), 4, 2);
  EXPECT_TRUE(spectra_match(f, spectrum_of({4, kSqrt2, kSqrt2, 0, -kSqrt2, -kSqrt2, -2, -2})));
  EXPECT_TRUE(spectra_match(f, adjacency_spectrum(total_graph(c4).graph)));
  EXPECT_TRUE(spectra_match(total_q_spectrum_formula(adjacency_spectrum(c4), 4, 2), q_spectrum(total_graph(c4).graph)));
}

TEST(TotalSpectrumFormula, K3AndK4) {
  const Graph k3 = build_complete(3);
  EXPECT_TRUE(spectra_match(total_adjacency_spectrum_formula(adjacency_spectrum(k3), 3, 2),
                            adjacency_spectrum(total_graph(k3).graph)));
  const Spectrum q = total_q_spectrum_formula(adjacency_spectrum(k3), 3, 2);
  EXPECT_TRUE(spectra_match(q, spectrum_of({8, 4, 4, 4, 2, 2})));

  const Graph k4 = build_complete(4);
  const Spectrum a = total_adjacency_spectrum_formula(adjacency_spectrum(k4), 4, 3);
  EXPECT_EQ(a.size(), 10u);
  EXPECT_TRUE(spectra_match(a, adjacency_spectrum(total_graph(k4).graph)));
  // Trace of Q(T(G)) for the 2r-regular total graph on n + nr/2 vertices.
  const Spectrum qk4 = total_q_spectrum_formula(adjacency_spectrum(k4), 4, 3);
  EXPECT_NEAR(qk4.sum(), 2.0 * 3 * (4 + 4 * 3 / 2.0), 1e-9);
}

TEST(TotalSpectrumFormula, Preconditions) {
  const Spectrum s = adjacency_spectrum(build_complete(2));
  EXPECT_THROW(total_adjacency_spectrum_formula(s, 2, 1), PreconditionError);
  EXPECT_THROW(total_q_spectrum_formula(s, 2, 1), PreconditionError);
  EXPECT_THROW(total_adjacency_spectrum_formula(adjacency_spectrum(build_complete(4)), 3, 3), PreconditionError);
  EXPECT_THROW(total_adjacency_spectrum_formula(adjacency_spectrum(build_petersen()), 9, 3), PreconditionError);
}

TEST(TotalSpectrumFormula, BranchesAtRadicandZero) {
  // 4x + r^2 + 4 = 0 at x = -2 for r = 2; both branches meet at -2.
  EXPECT_DOUBLE_EQ(total_branch_plus(-2.0, 2.0), -2.0);
  EXPECT_DOUBLE_EQ(total_branch_minus(-2.0, 2.0), -2.0);
  EXPECT_NEAR(total_branch_plus(2.0, 2.0), 4.0, 1e-12);
  EXPECT_NEAR(total_branch_minus(2.0, 2.0), 0.0, 1e-12);
}

TEST(TotalSpectrumFormula, RegularCorpus) {
  for (const Graph& g : gen_regular_corpus(3, 8)) {
    const auto r = *is_regular(g);
    if (r < 2) continue;
    const Graph t = total_graph(g).graph;
    const Spectrum a = adjacency_spectrum(g);
    ASSERT_TRUE(spectra_match(total_adjacency_spectrum_formula(a, g.order(), r), adjacency_spectrum(t)));
    ASSERT_TRUE(spectra_match(total_q_spectrum_formula(a, g.order(), r), q_spectrum(t)));
  }
}

TEST(Bounds, TotalExamples) {
  const EnergyBounds b21 = ie_total_bounds(2, 1);
  EXPECT_NEAR(b21.lower, 4.0, 1e-12);
  EXPECT_NEAR(b21.upper, 5.0, 1e-12);
  const EnergyBounds b32 = ie_total_bounds(3, 2);
  EXPECT_NEAR(b32.lower, 2.0 + 6.0 * kSqrt2, 1e-12);
  EXPECT_NEAR(b32.upper, 4.0 + 6.0 * kSqrt2, 1e-12);
  const double ie = incidence_energy(total_graph(build_complete(3)).graph);
  EXPECT_LT(b32.lower, ie);
  EXPECT_LT(ie, b32.upper);
  EXPECT_THROW(ie_total_bounds(0, 1), DomainError);
  EXPECT_THROW(ie_total_bounds(2, 0), DomainError);
}

TEST(Bounds, ConsecutiveFormAtFirstStep) {
  // n_1 = n + nr/2 and r_1 = 2r, so the head coefficient n_1 - 2n_0 is
  // n(r-2)/2 and the consecutive form collapses to ie_total_bounds.
  for (double r : {2.0, 3.0, 4.0}) {
    const double n = 6;
    const EnergyBounds a = ie_total_bounds(n, r);
    const EnergyBounds b = ie_total_bounds_consecutive(n + n * r / 2, 2 * r, n, r);
    EXPECT_NEAR(a.lower, b.lower, 1e-9);
    EXPECT_NEAR(a.upper, b.upper, 1e-9);
  }
}

TEST(Bounds, LineExamples) {
  const double k4 = ie_line_bound(4, 3);
  EXPECT_NEAR(k4, 6.0 + 4.0 * kSqrt2, 1e-12);
  EXPECT_NEAR(incidence_energy(line_graph(build_complete(4)).graph), k4, 1e-9);
  const double c5 = ie_line_bound(5, 2);
  EXPECT_LT(incidence_energy(line_graph(build_cycle(5)).graph), c5);
  EXPECT_THROW(ie_line_bound(2, 1), DomainError);
}

TEST(RegularIterateParams, Examples) {
  const auto t = regular_iterate_params(4, 3, 2, Operator::kTotal);
  EXPECT_EQ(t.orders, (std::vector<std::uint64_t>{4, 10, 40}));
  EXPECT_EQ(t.degrees, (std::vector<std::uint64_t>{3, 6, 12}));
  const Graph t2 = iterate(build_complete(4), Operator::kTotal, 2);
  EXPECT_EQ(t2.order(), t.n());
  EXPECT_EQ(is_regular(t2), std::optional<std::size_t>(t.r()));

  const auto l = regular_iterate_params(10, 3, 2, Operator::kLine);
  EXPECT_EQ(l.n(), 30u);
  EXPECT_EQ(l.r(), 6u);
  const Graph l2 = iterate(build_petersen(), Operator::kLine, 2);
  EXPECT_EQ(l2.order(), 30u);
  EXPECT_EQ(is_regular(l2), std::optional<std::size_t>(6));

  const auto z = regular_iterate_params(7, 2, 0, Operator::kLine);
  EXPECT_EQ(z.n(), 7u);
  EXPECT_EQ(z.r(), 2u);
}

TEST(RegularIterateParams, DomainErrors) {
  // Line iterates of a perfect matching reach degree 0 and then negative.
  EXPECT_THROW(regular_iterate_params(4, 1, 2, Operator::kLine), DomainError);
  EXPECT_THROW(regular_iterate_params(3, 3, 1, Operator::kTotal), DomainError);
  EXPECT_THROW(regular_iterate_params(4, 3, 12, Operator::kTotal), DomainError);
}

TEST(Cospectral, Certificates) {
  const auto self = cospectral_certificate(build_petersen(), build_petersen(), MatrixKind::kAdjacency);
  EXPECT_TRUE(self.cospectral);
  EXPECT_TRUE(self.isomorphic);
  EXPECT_FALSE(self.certified_pair());

  const auto pair = cospectral_certificate(build_shrikhande(), build_rook(4), MatrixKind::kAdjacency);
  EXPECT_TRUE(pair.cospectral);
  EXPECT_FALSE(pair.isomorphic);
  EXPECT_TRUE(pair.certified_pair());
  EXPECT_EQ(pair.poly_a, pair.poly_b);

  const auto q = cospectral_certificate(build_shrikhande(), build_rook(4), MatrixKind::kSignlessLaplacian);
  EXPECT_TRUE(q.certified_pair());

  const auto diff = cospectral_certificate(build_cube(), build_complete_bipartite(4, 4), MatrixKind::kAdjacency);
  EXPECT_FALSE(diff.cospectral);
}
