#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "cxosc/params.hpp"

using cxosc::AlgebraParams;
using cxosc::Complex;

TEST(Params, AlphaLambda2) {
  const AlgebraParams p(2, {Complex{0.7, 0.0}});
  EXPECT_NEAR(p.alpha(0), 0.7, 1e-15);
  EXPECT_NEAR(p.alpha(1), -0.7, 1e-15);
}

TEST(Params, AlphaLambda3BruteForce) {
  const Complex g{0.2, 0.1};
  const AlgebraParams p(3, {g, std::conj(g)});
  EXPECT_NEAR(p.alpha(0), 0.4, 1e-15);
  for (int mu = 0; mu < 3; ++mu) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * mu / 3.0);
    EXPECT_NEAR(p.alpha(mu), 2.0 * (g * w).real(), 1e-14);
  }
  EXPECT_NEAR(p.alpha(0) + p.alpha(1) + p.alpha(2), 0.0, 1e-14);
}

TEST(Params, UndeformedAlphaIsZero) {
  for (int lambda = 2; lambda <= 6; ++lambda) {
    const auto p = AlgebraParams::undeformed(lambda);
    for (double a : p.alpha()) {
      EXPECT_EQ(a, 0.0);
    }
  }
}

TEST(Params, RejectsConjugationViolation) {
  EXPECT_THROW(AlgebraParams(3, {Complex{0.2, 0.1}, Complex{0.2, 0.1}}), std::invalid_argument);
  EXPECT_THROW(AlgebraParams(3, {Complex{0.2, 0.1}}), std::invalid_argument);
  EXPECT_THROW(AlgebraParams(1, {}), std::invalid_argument);
}

TEST(Params, GammaFromAlpha) {
  EXPECT_EQ(cxosc::gamma_from_alpha(4, std::vector<double>(4, 0.0)), std::vector<Complex>(3));
  const std::vector<double> alpha{0.3, -0.3};
  const auto g = cxosc::gamma_from_alpha(2, alpha);
  EXPECT_NEAR(std::abs(g[0] - Complex{0.3, 0.0}), 0.0, 1e-15);
  EXPECT_THROW(cxosc::gamma_from_alpha(2, std::vector<double>{0.3, 0.1}), std::invalid_argument);
}

TEST(Params, AlphaGammaRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int lambda = 2 + trial % 5;
    const auto p = cxosc::random_admissible(lambda, rng);
    const auto g = cxosc::gamma_from_alpha(lambda, p.alpha());
    for (int r = 1; r < lambda; ++r) {
      EXPECT_LT(std::abs(g[static_cast<std::size_t>(r - 1)] - p.gamma(r)), 1e-12);
    }
    const AlgebraParams back(lambda, g);
    for (int mu = 0; mu < lambda; ++mu) {
      EXPECT_NEAR(back.alpha(mu), p.alpha(mu), 1e-12);
    }
  }
  // random alpha with zero sum, lambda = 5
  std::vector<double> alpha(5);
  double sum = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    alpha[static_cast<std::size_t>(mu)] = cxosc::canonical_uniform(rng) - 0.5;
    sum += alpha[static_cast<std::size_t>(mu)];
  }
  alpha[4] = -sum;
  const AlgebraParams p(5, cxosc::gamma_from_alpha(5, alpha));
  for (int mu = 0; mu < 5; ++mu) {
    EXPECT_NEAR(p.alpha(mu), alpha[static_cast<std::size_t>(mu)], 1e-12);
  }
}

TEST(Params, StructureFunction) {
  const auto bare = AlgebraParams::undeformed(3);
  for (long n = -10; n <= 10; ++n) {
    EXPECT_EQ(cxosc::structure_function(bare, n), static_cast<double>(n));
  }
  const double r = 0.35;
  const AlgebraParams p(2, {Complex{r, 0.0}});
  for (long n = 0; n <= 12; ++n) {
    EXPECT_NEAR(cxosc::structure_function(p, n), n + r * (1 - (n % 2 == 0 ? 1 : -1)) / 2.0, 1e-13);
  }
  EXPECT_NEAR(cxosc::structure_function(p, -1), -(1.0 - r), 1e-14);
}

TEST(Params, StructureFunctionRecursionAndPeriodicity) {
  std::mt19937_64 rng(3);
  for (int lambda = 2; lambda <= 5; ++lambda) {
    const auto p = cxosc::random_admissible(lambda, rng);
    for (long n = -64; n < 64; ++n) {
      EXPECT_NEAR(cxosc::structure_function(p, n + 1) - cxosc::structure_function(p, n), 1.0 + p.alpha(n), 1e-12);
    }
    for (long k = -5; k <= 5; ++k) {
      EXPECT_NEAR(cxosc::structure_function(p, k * lambda), static_cast<double>(k * lambda), 1e-12);
    }
  }
}

TEST(Params, JCoefficients) {
  const auto bare = AlgebraParams::undeformed(4);
  for (double j : cxosc::j_coefficients(bare)) {
    EXPECT_EQ(j, 0.0);
  }
  const AlgebraParams p(2, {Complex{0.6, 0.0}});
  const auto j = cxosc::j_coefficients(p);
  EXPECT_NEAR(j[0], 0.3, 1e-15);
  EXPECT_NEAR(j[1], 0.3, 1e-15);
  EXPECT_NEAR(cxosc::closed_form_energy(p, 5), 5.8, 1e-14);
}

TEST(Params, UnitarityPredicate) {
  EXPECT_TRUE(cxosc::fock_is_unitary(AlgebraParams::undeformed(3), 63));
  EXPECT_FALSE(cxosc::fock_is_unitary(AlgebraParams(3, {Complex{-2.0, 0.0}, Complex{-2.0, 0.0}}), 63));
}

TEST(Params, SeededDrawsAreReproducible) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(cxosc::random_admissible(4, a).gamma(), cxosc::random_admissible(4, b).gamma());
  }
}
