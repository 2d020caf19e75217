#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cxosc {

using Complex = std::complex<double>;

inline constexpr double kConstraintTolerance = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-10;

/// λ and the deformation parameters γ_1..γ_{λ−1} of [a, a†] = I + Σ γ_r K^r.
///
/// Construction validates γ_r* = γ_{λ−r}; the derived α_μ are cached.
class AlgebraParams {
 public:
  AlgebraParams(int lambda, std::vector<Complex> gamma);

  static AlgebraParams undeformed(int lambda);

  int lambda() const { return lambda_; }
  /// gamma()[r-1] is γ_r.
  const std::vector<Complex>& gamma() const { return gamma_; }
  Complex gamma(int r) const { return gamma_[static_cast<std::size_t>(r - 1)]; }
  const std::vector<double>& alpha() const { return alpha_; }
  double alpha(long mu) const;
  bool is_undeformed() const;

 private:
  int lambda_;
  std::vector<Complex> gamma_;
  std::vector<double> alpha_;
};

/// α_μ = Σ_{r=1}^{λ−1} e^{2πiμr/λ} γ_r for μ = 0..λ−1.
/// Throws std::domain_error when the sum is not real to tolerance.
std::vector<double> alpha_from_gamma(const AlgebraParams& params);

/// Inverse transform: γ_r = (1/λ) Σ_μ e^{−2πiμr/λ} α_μ.
/// Throws std::invalid_argument unless Σ α_μ = 0.
std::vector<Complex> gamma_from_alpha(int lambda, std::span<const double> alpha);

/// F(n) with F(0) = 0 and F(n+1) − F(n) = 1 + α_{n mod λ} for all n ∈ Z.
double structure_function(const AlgebraParams& params, long n);

/// H₀ shifts j_μ: j_μ = Σ_{ν<μ} α_ν + α_μ / 2.
std::vector<double> j_coefficients(const AlgebraParams& params);

/// The same sum written with γ in place of α (γ_0 taken as 0, j_0 = α_0/2).
/// Reported for comparison only.
std::vector<Complex> j_coefficients_gamma_literal(const AlgebraParams& params);

/// E_{kλ+μ} = kλ + μ + j_μ + 1/2.
double closed_form_energy(const AlgebraParams& params, long n);

/// True iff F(n) > 0 for 1 ≤ n ≤ top.
bool fock_is_unitary(const AlgebraParams& params, long top);

/// Uniform double in [0, 1) from the top 53 bits; reproducible across
/// standard libraries.
double canonical_uniform(std::mt19937_64& rng);

/// Random γ satisfying the conjugation constraint, |Re|, |Im| ≤ scale.
AlgebraParams random_admissible(int lambda, std::mt19937_64& rng, double scale = 0.4);

}  // namespace cxosc
