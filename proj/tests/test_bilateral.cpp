#include <gtest/gtest.h>

#include <random>

#include "cxosc/bilateral.hpp"

using cxosc::AlgebraParams;
using cxosc::Complex;
using cxosc::GammaPolynomial;

namespace {

template <class Rep>
auto defining_deformation(const Rep& rep) {
  auto out = rep.identity();
  for (int r = 1; r < rep.lambda(); ++r) {
    out += rep.field().gamma(r) * rep.K_power(r);
  }
  return out;
}

}  // namespace

TEST(Bilateral, UndeformedAction) {
  const auto rep = cxosc::build_bilateral(AlgebraParams::undeformed(2), -8, 8);
  EXPECT_EQ(rep.a().coefficient(-3, -2), Complex(-2.0, 0.0));
  EXPECT_EQ(rep.F(5), Complex(5.0, 0.0));
}

TEST(Bilateral, BackwardRecursion) {
  const double r = 0.3;
  const auto rep = cxosc::build_bilateral(AlgebraParams(2, {Complex{r, 0.0}}));
  EXPECT_NEAR(std::abs(rep.F(-1) - Complex{-(1.0 - r), 0.0}), 0.0, 1e-15);
}

TEST(Bilateral, WindowTooSmall) {
  EXPECT_THROW(cxosc::build_bilateral(AlgebraParams::undeformed(2), -4, 4), std::invalid_argument);
}

TEST(Bilateral, MonomialExamples) {
  const auto rep = cxosc::build_bilateral(AlgebraParams::undeformed(3));
  const auto id = rep.monomial(0, 0, 0);
  EXPECT_EQ(cxosc::interior_residual(id, rep.identity()), 0.0);
  const auto m = rep.monomial(-2, 0, 1);
  EXPECT_EQ(m.net_shift(), -2);
  for (long n = -5; n <= 5; ++n) {
    const Complex expected = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(((n % 3) + 3) % 3) / 3.0);
    EXPECT_LT(std::abs(m.coefficient(n - 2, n) - expected), 1e-15);
  }
  const auto number = rep.monomial(1, 1, 0);
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(number.coefficient(n, n), rep.F(n));
  }
}

TEST(Bilateral, ExactDefiningRelationsWithFormalGamma) {
  for (int lambda = 2; lambda <= 5; ++lambda) {
    const auto rep = cxosc::build_exact_bilateral(lambda, -12, 12);
    const auto bracket = cxosc::commutator(rep.a(), rep.a_dag());
    EXPECT_FALSE(cxosc::first_interior_difference(bracket, defining_deformation(rep))) << "lambda " << lambda;
    const auto phase = rep.field().zeta_power(-2);
    EXPECT_FALSE(cxosc::first_interior_difference(rep.a_dag() * rep.K(), phase * (rep.K() * rep.a_dag())));
    EXPECT_FALSE(cxosc::first_interior_difference(cxosc::commutator(rep.N(), rep.a_dag()), rep.a_dag()));
    EXPECT_FALSE(cxosc::first_interior_difference(rep.a_dag() * rep.a_dag_inv(), rep.identity()));
    EXPECT_FALSE(cxosc::first_interior_difference(rep.a_dag_inv() * rep.a_dag(), rep.identity()));
    EXPECT_FALSE(cxosc::first_interior_difference(rep.K_power(lambda), rep.identity()));
  }
}

TEST(Bilateral, NumericDefiningRelation) {
  std::mt19937_64 rng(5);
  for (int lambda = 2; lambda <= 5; ++lambda) {
    const auto rep = cxosc::build_bilateral(cxosc::random_admissible(lambda, rng));
    EXPECT_LE(cxosc::interior_residual(cxosc::commutator(rep.a(), rep.a_dag()), defining_deformation(rep)), 1e-12);
  }
}

TEST(Bilateral, DroppingDeformationIsNegativeControl) {
  const AlgebraParams p(3, {Complex{0.2, 0.1}, Complex{0.2, -0.1}});
  const auto rep = cxosc::build_bilateral(p);
  const double residual = cxosc::interior_residual(rep.a() * rep.a_dag(), rep.a_dag() * rep.a());
  double expected = 0.0;
  for (int mu = 0; mu < 3; ++mu) {
    expected = std::max(expected, std::abs(1.0 + p.alpha(mu)));
  }
  EXPECT_NEAR(residual, expected, 1e-12);
}

TEST(Bilateral, WindowIndependence) {
  std::mt19937_64 rng(9);
  const auto p = cxosc::random_admissible(4, rng);
  const auto small = cxosc::build_bilateral(p, -10, 10);
  const auto large = cxosc::build_bilateral(p, -30, 30);
  const auto ws = small.monomial(2, 3, 1);
  const auto wl = large.monomial(2, 3, 1);
  for (long n = ws.valid_lo(); n <= ws.valid_hi(); ++n) {
    EXPECT_EQ(ws.coefficient(n - 1, n), wl.coefficient(n - 1, n));
  }
}
