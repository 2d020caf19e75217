#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "cxosc/fock.hpp"

using cxosc::AlgebraParams;
using cxosc::Complex;

namespace {

double residual_of(const std::vector<cxosc::VerificationEntry>& entries, const std::string& prefix) {
  for (const auto& e : entries) {
    if (e.identity.rfind(prefix, 0) == 0) {
      return e.min_residual();
    }
  }
  ADD_FAILURE() << "no entry " << prefix;
  return 0.0;
}

}  // namespace

TEST(Fock, UndeformedOscillator) {
  const auto rep = cxosc::build_fock_rep(AlgebraParams::undeformed(2), 4);
  EXPECT_TRUE(rep.unitary);
  for (int n = 1; n < 4; ++n) {
    EXPECT_NEAR(rep.a(n - 1, n).real(), std::sqrt(static_cast<double>(n)), 1e-15);
  }
  EXPECT_EQ((rep.a_dag - rep.a.adjoint()).norm(), 0.0);
}

TEST(Fock, NumberDiagonalLambda2) {
  const auto rep = cxosc::build_fock_rep(AlgebraParams(2, {Complex{0.5, 0.0}}), 6);
  const Eigen::MatrixXcd n = rep.a_dag * rep.a;
  const double expected[] = {0, 1.5, 2, 3.5, 4, 5.5};
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(n(i, i).real(), expected[i], 1e-14);
  }
}

TEST(Fock, NonUnitaryFallsBackToModule) {
  const auto rep = cxosc::build_fock_rep(AlgebraParams(3, {Complex{-2.0, 0.0}, Complex{-2.0, 0.0}}), 12);
  EXPECT_FALSE(rep.unitary);
  EXPECT_EQ(rep.normalization, cxosc::Normalization::module);
  EXPECT_EQ(rep.a_dag(1, 0), Complex(1.0, 0.0));
  const auto entries = cxosc::verify_gdoa(rep, 1e-12);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.pass()) << e.identity;
  }
}

TEST(Fock, DimensionBounds) {
  EXPECT_THROW(cxosc::build_fock_rep(AlgebraParams::undeformed(4), 7), std::invalid_argument);
  EXPECT_THROW(cxosc::build_fock_rep(AlgebraParams::undeformed(2), 300), std::invalid_argument);
}

TEST(Fock, HamiltonianShift) {
  const double r = 0.4;
  const auto rep = cxosc::build_fock_rep(AlgebraParams(2, {Complex{r, 0.0}}), 16);
  const auto h = cxosc::hamiltonian(rep);
  for (int n = 0; n < 15; ++n) {
    EXPECT_NEAR(h(n, n).real(), n + 0.5 + r / 2.0, 1e-13);
  }
}

TEST(Fock, HamiltonianMatchesProjectorForm) {
  std::mt19937_64 rng(21);
  for (int lambda = 2; lambda <= 5; ++lambda) {
    const auto p = cxosc::random_admissible(lambda, rng);
    const auto rep = cxosc::build_fock_rep(p, 32);
    const auto j = cxosc::j_coefficients(p);
    Eigen::MatrixXcd expected = rep.N + 0.5 * Eigen::MatrixXcd::Identity(32, 32);
    for (int mu = 0; mu < lambda; ++mu) {
      expected += j[static_cast<std::size_t>(mu)] * rep.P[static_cast<std::size_t>(mu)];
    }
    EXPECT_LE(cxosc::interior_residual(cxosc::hamiltonian(rep), expected, 1), 1e-12);
  }
}

TEST(Fock, SpectrumLambda3) {
  const auto rep = cxosc::build_fock_rep(AlgebraParams(3, {Complex{0.3, 0.0}, Complex{0.3, 0.0}}), 40);
  for (const auto& row : cxosc::spectrum_table(rep, 39)) {
    EXPECT_LE(row.delta, 1e-10);
  }
}

TEST(Fock, GdoaGrid) {
  std::mt19937_64 rng(1);
  for (int lambda = 2; lambda <= 5; ++lambda) {
    for (int dim : {16, 64}) {
      const auto rep = cxosc::build_fock_rep(cxosc::random_admissible(lambda, rng), dim);
      const auto entries = cxosc::verify_gdoa(rep, 1e-12);
      ASSERT_EQ(entries.size(), 8u);
      for (const auto& e : entries) {
        EXPECT_TRUE(e.pass()) << e.identity << " lambda " << lambda;
      }
    }
  }
  const auto rep = cxosc::build_fock_rep(AlgebraParams(2, {Complex{0.7, 0.0}}), 64);
  for (const auto& e : cxosc::verify_gdoa(rep, 1e-12)) {
    EXPECT_TRUE(e.pass()) << e.identity;
  }
}

// Relabelling K|n> by the phase of n+1 multiplies K by a global phase, which
// the homogeneous relation ad*K = w^-1 K*ad cannot see; the deformed
// commutator does see it. A phase doubling breaks ad*K.
TEST(Fock, SabotagedCyclicOperator) {
  const int lambda = 2;
  auto rep = cxosc::build_fock_rep(AlgebraParams(lambda, {Complex{0.7, 0.0}}), 32);
  auto shifted = rep;
  for (int n = 0; n < 32; ++n) {
    shifted.K(n, n) = std::polar(1.0, 2.0 * std::numbers::pi * (n + 1) / lambda);
  }
  shifted.P = cxosc::projectors_from_cyclic(shifted.K, lambda);
  auto entries = cxosc::verify_gdoa(shifted, 1e-12);
  EXPECT_LE(residual_of(entries, "ad*K"), 1e-12);
  EXPECT_GE(residual_of(entries, "[a,ad]"), 0.1);

  auto doubled = cxosc::build_fock_rep(AlgebraParams(3, {Complex{0.2, 0.1}, Complex{0.2, -0.1}}), 32);
  for (int n = 0; n < 32; ++n) {
    doubled.K(n, n) = std::polar(1.0, 4.0 * std::numbers::pi * n / 3.0);
  }
  entries = cxosc::verify_gdoa(doubled, 1e-12);
  EXPECT_GE(residual_of(entries, "ad*K"), 0.1);
}
