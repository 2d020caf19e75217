#pragma once

#include <numbers>

#include "cxosc/gamma_polynomial.hpp"
#include "cxosc/params.hpp"

namespace cxosc {

// Coefficient fields for the window backends. A field supplies integers,
// powers of ζ = e^{iπ/λ}, the deformation parameters γ_r, and α_μ in its
// own scalar type, so the same operator code runs numerically (complex
// doubles, concrete γ) and exactly (formal γ symbols over Q[ζ]).

/// Complex doubles with concrete γ values.
class NumericField {
 public:
  using Scalar = Complex;

  explicit NumericField(AlgebraParams params) : params_(std::move(params)) {}

  int lambda() const { return params_.lambda(); }
  const AlgebraParams& params() const { return params_; }

  Scalar integer(long value) const { return {static_cast<double>(value), 0.0}; }
  Scalar zeta_power(long exponent) const {
    const long order = 2L * lambda();
    long k = exponent % order;
    if (k < 0) {
      k += order;
    }
    return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / lambda());
  }
  Scalar gamma(int r) const { return params_.gamma(r); }
  Scalar alpha(long mu) const { return {params_.alpha(mu), 0.0}; }

 private:
  AlgebraParams params_;
};

/// Exact scalars with γ_r kept as formal symbols.
class SymbolicField {
 public:
  using Scalar = GammaPolynomial;

  explicit SymbolicField(int lambda);

  int lambda() const { return lambda_; }

  Scalar integer(long value) const { return GammaPolynomial(value); }
  Scalar zeta_power(long exponent) const { return CyclotomicScalar::zeta_power(lambda_, exponent); }
  Scalar gamma(int r) const { return GammaPolynomial::symbol(r); }
  /// α_μ = Σ_r ζ^{2μr} γ_r.
  Scalar alpha(long mu) const;

 private:
  int lambda_;
};

/// e^{2πi n s/λ} = ζ^{2ns}: the eigenvalue of K^s on |n⟩.
template <class Field>
typename Field::Scalar cyclic_phase(const Field& field, long n, long s) {
  return field.zeta_power(2 * n * s);
}

/// F(n) by running F(n+1) = F(n) + 1 + α_{n mod λ} from F(0) = 0, in either
/// direction. In the exact field the recursion holds identically; the
/// periodicity F(kλ) = kλ only holds after evaluating ζ.
template <class Field>
typename Field::Scalar structure_value(const Field& field, long n) {
  using Scalar = typename Field::Scalar;
  Scalar value = field.integer(0);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      value += field.integer(1) + field.alpha(k);
    }
  } else {
    for (long k = n; k < 0; ++k) {
      value -= field.integer(1) + field.alpha(k);
    }
  }
  return value;
}

}  // namespace cxosc
