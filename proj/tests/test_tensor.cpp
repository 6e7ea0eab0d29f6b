#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ohg/battery.hpp"
#include "ohg/tensor.hpp"

using namespace ohg;

namespace {

const Complex I(0, 1);

SignedHypergraph uniform_signed(const OrientedHypergraph& g, Sign s) {
  return SignedHypergraph::uniform(g.structure(), s);
}

ComplexVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  ComplexVector x(n);
  for (auto& c : x) c = {d(rng), d(rng)};
  return x;
}

double max_diff(const ComplexVector& a, const ComplexVector& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(AdjApply, SinglePositiveEdge) {
  for (std::size_t k = 2; k <= 5; ++k) {
    auto y = adj_apply(uniform_signed(fixtures::single_edge(k), Sign::positive), ComplexVector(k, 1.0));
    for (auto c : y) EXPECT_EQ(c, Complex(1));
  }
}

TEST(AdjApply, ExampleEigenvector) {
  auto y = adj_apply(induced_signed(fixtures::ex()), {I, 1, I, 1, I, 1});
  const ComplexVector want{2.0 * I, -2, 2.0 * I, -2, 2.0 * I, -2};
  EXPECT_LT(max_diff(y, want), 1e-15);
}

TEST(AdjApply, ZeroVector) {
  auto y = adj_apply(induced_signed(fixtures::ex()), ComplexVector(6, 0.0));
  for (auto c : y) EXPECT_EQ(c, Complex(0));
}

TEST(AdjApply, MatchesDenseTensor) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + trial % 3;
    ohg::GenerateParams p;
    p.n = k + rng() % (7 - k);
    p.m = 1 + rng() % 5;
    p.min_size = p.max_size = k;
    p.p_neg = 0.5;
    auto g = induced_signed(generate(p, rng()));
    auto x = random_vector(rng, p.n);
    EXPECT_LT(max_diff(adj_apply(g, x), oracle::dense_adj_apply(g, x)), 1e-12) << "k=" << k;
  }
}

TEST(AdjApply, DimensionMismatch) {
  EXPECT_THROW(adj_apply(induced_signed(fixtures::ex()), ComplexVector(3, 1.0)), Error);
}

TEST(Forms, ContractionIdentity) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    ohg::GenerateParams p;
    p.n = 4 + rng() % 4;
    p.m = 1 + rng() % 5;
    p.min_size = p.max_size = 2 + rng() % 3;
    p.p_neg = 0.5;
    auto g = induced_signed(generate(p, rng()));
    auto x = random_vector(rng, p.n);
    Complex a(0), l(0);
    auto ya = adj_apply(g, x), yl = lap_apply(g, x);
    for (std::size_t v = 0; v < p.n; ++v) a += x[v] * ya[v], l += x[v] * yl[v];
    EXPECT_LT(std::abs(adj_form(g, x) - a), 1e-10);
    EXPECT_LT(std::abs(lap_form(g, x) - l), 1e-10);
  }
}

TEST(Laplacian, NegativeEvenEdgeAllOnes) {
  auto g = uniform_signed(fixtures::single_edge(4), Sign::negative);
  for (auto c : lap_apply(g, ComplexVector(4, 1.0))) EXPECT_EQ(c, Complex(0));
  EXPECT_EQ(lap_form(g, ComplexVector(4, 1.0)), Complex(0));
}

TEST(Laplacian, IndicatorVector) {
  auto g = uniform_signed(fixtures::single_edge(4), Sign::negative);
  ComplexVector e1{1, 0, 0, 0};
  EXPECT_EQ(lap_apply(g, e1), (ComplexVector{1, 0, 0, 0}));
  EXPECT_EQ(lap_form(g, e1), Complex(1));
}

TEST(Laplacian, ExampleFormOnOnes) {
  EXPECT_EQ(lap_form(induced_signed(fixtures::ex()), ComplexVector(6, 1.0)), Complex(24));
}

TEST(Laplacian, IntegerSignatureEvaluationMatchesComplex) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    ohg::GenerateParams p;
    p.n = 4 + rng() % 4;
    p.m = 1 + rng() % 5;
    p.min_size = p.max_size = trial % 2 ? 2 : 4;
    p.p_neg = 0.5;
    auto g = induced_signed(generate(p, rng()));
    std::vector<Sign> s(p.n);
    for (auto& x : s) x = rng() & 1 ? Sign::negative : Sign::positive;
    ComplexVector xc;
    for (auto x : s) xc.push_back(value(x));
    auto exact = lap_apply_signature(g, s);
    auto approx = lap_apply(g, xc);
    for (std::size_t v = 0; v < p.n; ++v) EXPECT_EQ(Complex(static_cast<double>(exact[v])), approx[v]);
  }
}

TEST(Nqz, SingleEdge) {
  for (std::size_t k = 2; k <= 6; ++k) {
    auto r = nqz_spectral_radius(fixtures::single_edge(k).structure());
    EXPECT_NEAR(r.rho, 1, 1e-8);
    for (double x : r.perron) EXPECT_NEAR(x, 1, 1e-8);
  }
}

TEST(Nqz, ExampleCycle) { EXPECT_NEAR(nqz_spectral_radius(fixtures::ex().structure()).rho, 2, 1e-6); }

TEST(Nqz, GraphTriangle) { EXPECT_NEAR(nqz_spectral_radius(fixtures::triangle_pos().structure()).rho, 2, 1e-7); }

TEST(Nqz, GraphCaseMatchesJacobi) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = fixtures::random_connected(rng, 8, 10, 2);
    auto r = nqz_spectral_radius(g.structure());
    auto e = linalg::sym_eigenvalues(adjacency_matrix(all_positive_variant(g)));
    EXPECT_NEAR(r.rho, e.back(), 1e-7);
  }
}

TEST(Nqz, BoundsBracketAndResidual) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    ohg::GenerateParams p;
    p.n = 4 + rng() % 5;
    p.min_size = p.max_size = 4;
    p.m = std::max<std::size_t>(1, (p.n + 1) / 3) + rng() % 3;
    p.connected = true;
    auto h = generate(p, rng()).structure();
    auto r = nqz_spectral_radius(h);
    ASSERT_EQ(r.lower.size(), r.iterations);
    for (std::size_t i = 0; i < r.iterations; ++i) {
      EXPECT_LE(r.lower[i], r.rho + 1e-9);
      EXPECT_GE(r.upper[i], r.rho - 1e-9);
    }
    for (double x : r.perron) EXPECT_GT(x, 0);
    EXPECT_LE(eigenpair_residual(SignedHypergraph::uniform(h, Sign::positive), r.rho, to_complex(r.perron)),
              10 * NqzOptions{}.tol);
  }
}

TEST(Nqz, Errors) {
  try {
    nqz_spectral_radius(build(4, {{1, 2}, {3, 4}}).structure());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::disconnected_input);
  }
  EXPECT_THROW(nqz_spectral_radius(build(3, {{1, 2}, {1, 2, 3}}).structure()), Error);
  NqzOptions tight;
  tight.max_iters = 1;
  tight.tol = 1e-300;
  try {
    nqz_spectral_radius(fixtures::triangle_pos().structure(), tight);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_convergence);
  }
}

TEST(Residual, Examples) {
  EXPECT_LE(eigenpair_residual(induced_signed(fixtures::ex()), -2.0, {I, 1, I, 1, I, 1}), 1e-12);
  EXPECT_NEAR(eigenpair_residual(uniform_signed(fixtures::single_edge(3), Sign::positive), 0.0, ComplexVector(3, 1.0)),
              1.0, 1e-15);
  EXPECT_THROW(eigenpair_residual(induced_signed(fixtures::ex()), 1.0, ComplexVector(6, 0.0)), Error);
}

TEST(OddBipartite, SingleEdgeTakesFirstVertex) {
  auto r = odd_bipartite(fixtures::single_edge(4).structure());
  ASSERT_TRUE(std::holds_alternative<OddBipartition>(r));
  EXPECT_EQ(std::get<OddBipartition>(r).first, (std::vector<VertexId>{0}));
}

TEST(OddBipartite, ExampleCycleIsNot) {
  EXPECT_TRUE(std::holds_alternative<NotOddBipartite>(odd_bipartite(fixtures::ex().structure())));
}

TEST(OddBipartite, EvenGraphCycleIsProperColoring) {
  auto g = fixtures::cycle(6);
  auto r = odd_bipartite(g.structure());
  ASSERT_TRUE(std::holds_alternative<OddBipartition>(r));
  EXPECT_EQ(std::get<OddBipartition>(r).first, (std::vector<VertexId>{0, 2, 4}));
  EXPECT_TRUE(std::holds_alternative<NotOddBipartite>(odd_bipartite(fixtures::cycle(5).structure())));
}

TEST(OddBipartite, RequiresEvenUniform) {
  try {
    odd_bipartite(fixtures::single_edge(3).structure());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::odd_uniformity);
  }
  try {
    odd_bipartite(build(3, {{1, 2}, {1, 2, 3}}).structure());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_uniform);
  }
}

TEST(MinusRho, SingleNegativeEdge) {
  auto r = h_eigen_minus_rho(uniform_signed(fixtures::single_edge(4), Sign::negative));
  ASSERT_TRUE(std::holds_alternative<ParityCertificate>(r));
  const auto& c = std::get<ParityCertificate>(r);
  EXPECT_TRUE(c.w.empty());
  for (double x : c.eigenvector) EXPECT_NEAR(x, 1, 1e-12);
  EXPECT_LE(c.residual, 1e-12);
  EXPECT_NEAR(c.eigenvalue, -1, 1e-8);
}

TEST(MinusRho, ExampleCycleFails) {
  EXPECT_TRUE(std::holds_alternative<NotHEigenvalue>(h_eigen_minus_rho(induced_signed(fixtures::ex()))));
}

TEST(MinusRho, BalancedInstancesFeasible) {
  for (const auto& s : battery::even_uniform_ensemble(80, 5)) {
    if (!is_balanced(incidence_balance(s.instance))) continue;
    auto r = h_eigen_minus_rho(induced_signed(s.instance));
    ASSERT_TRUE(std::holds_alternative<ParityCertificate>(r)) << s.seed;
    EXPECT_TRUE(std::get<ParityCertificate>(r).verified());
  }
}

TEST(LapZero, AllPositiveStructure) {
  auto h = fixtures::ex().structure();
  auto r = lap_zero_h_eigen(SignedHypergraph::uniform(h, Sign::negative));
  ASSERT_TRUE(std::holds_alternative<ParityCertificate>(r));
  const auto& c = std::get<ParityCertificate>(r);
  EXPECT_TRUE(c.w.empty());
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.residual, 0);
  for (double x : c.eigenvector) EXPECT_EQ(x, 1);
}

TEST(LapZero, ExampleCycleFails) {
  EXPECT_TRUE(std::holds_alternative<NoZeroHEigenvalue>(lap_zero_h_eigen(induced_signed(fixtures::ex()))));
}

TEST(LapZero, PositiveEvenEdgeNeedsOddFlip) {
  auto r = lap_zero_h_eigen(uniform_signed(fixtures::single_edge(4), Sign::positive));
  ASSERT_TRUE(std::holds_alternative<ParityCertificate>(r));
  const auto& c = std::get<ParityCertificate>(r);
  EXPECT_EQ(c.w.size() % 2, 1u);
  EXPECT_EQ(c.residual, 0);
  EXPECT_TRUE(c.verified());
}

TEST(LapZero, RequiresConnected) {
  EXPECT_THROW(lap_zero_h_eigen(induced_signed(build(4, {{1, 2}, {3, 4}}))), Error);
}

TEST(Similarity, SelfIsIdentity) {
  auto g = induced_signed(fixtures::ex());
  auto r = signed_tensor_similarity(g, g);
  ASSERT_TRUE(std::holds_alternative<TensorSimilarity>(r));
  for (Sign s : std::get<TensorSimilarity>(r).s) EXPECT_EQ(s, Sign::positive);
  EXPECT_EQ(std::get<TensorSimilarity>(r).residual, 0);
}

TEST(Similarity, OppositeSignsOnOneEvenEdge) {
  auto h = fixtures::single_edge(4);
  auto r = signed_tensor_similarity(uniform_signed(h, Sign::positive), uniform_signed(h, Sign::negative));
  ASSERT_TRUE(std::holds_alternative<TensorSimilarity>(r));
  const auto& t = std::get<TensorSimilarity>(r);
  EXPECT_EQ(t.w.size() % 2, 1u);
  EXPECT_LE(t.residual, similarity_tol);
}

TEST(Similarity, ExampleCycleNotSimilar) {
  auto g = fixtures::ex();
  EXPECT_TRUE(std::holds_alternative<NotSimilar>(
      signed_tensor_similarity(induced_signed(g), induced_signed(all_positive_variant(g)))));
}

TEST(Similarity, WrongSignatureDetected) {
  auto g = induced_signed(fixtures::ex());
  TensorView a(g, TensorKind::adjacency);
  std::vector<Sign> s(6, Sign::positive);
  s[0] = Sign::negative;
  EXPECT_GT(similarity_defect(a, a, s, 1), 1e-3);
}

TEST(TensorBattery, AllPositiveStructureAllTrue) {
  auto h = fixtures::ex().structure();
  auto b = theorem_battery_even(SignedHypergraph::uniform(h, Sign::negative));
  for (bool s : b.statements) EXPECT_TRUE(s);
  ASSERT_TRUE(b.w);
  EXPECT_TRUE(b.w->empty());
  EXPECT_TRUE(b.agree());
}

TEST(TensorBattery, ExampleCycleAllFalse) {
  auto b = theorem_battery_even(induced_signed(fixtures::ex()));
  for (bool s : b.statements) EXPECT_FALSE(s);
  EXPECT_TRUE(b.agree());
  EXPECT_NEAR(b.rho, 2, 1e-6);
}

TEST(TensorBattery, BalancedImpliesAllTrue) {
  for (const auto& s : battery::even_uniform_ensemble(80, 11)) {
    auto c = battery::check_tensor(s.instance);
    EXPECT_TRUE(c.battery.agree()) << s.seed;
    EXPECT_TRUE(c.implication_holds()) << s.seed;
  }
}

TEST(TensorBattery, ConverseFailsOnSignPreservingFlip) {
  auto g = fixtures::sign_preserving();
  auto c = battery::check_tensor(g);
  EXPECT_TRUE(c.all_true());
  EXPECT_FALSE(c.incidence_balanced);
  EXPECT_TRUE(c.converse_witness());
}

TEST(TensorBattery, ParityFaultDetected) {
  TensorBatteryOptions opt;
  opt.fault = OracleFault::parity_rhs;
  auto b = theorem_battery_even(SignedHypergraph::uniform(fixtures::ex().structure(), Sign::negative), opt);
  EXPECT_FALSE(b.agree());
}

TEST(TensorBattery, Requirements) {
  EXPECT_THROW(theorem_battery_even(induced_signed(fixtures::single_edge(3))), Error);
  EXPECT_THROW(theorem_battery_even(induced_signed(build(4, {{1, 2}, {3, 4}}))), Error);
}
