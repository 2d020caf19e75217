#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cxosc {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& value);

/// Exact element of Q[ζ] / (ζ^λ + 1), ζ = e^{iπ/λ}.
///
/// Every phase that appears in the C_λ-extended oscillator algebra is a power
/// of ζ: e^{2πi r/λ} = ζ^{2r}, e^{iπ m₁m₂/λ} = ζ^{m₁m₂}. Exponents reduce mod
/// 2λ and ζ^{λ+k} folds onto −ζ^k, so each element is stored as λ rational
/// coefficients. Evaluation at ζ = e^{iπ/λ} is a ring homomorphism to C, so
/// equality here implies equality of the complex numbers; the converse fails
/// for vanishing sums such as 1 + ζ² + ζ⁴ at λ = 3.
///
/// A default-constructed or integer-constructed value is "untyped" (λ = 0)
/// and adopts the λ of whatever it is combined with.
class CyclotomicScalar {
 public:
  CyclotomicScalar() = default;
  CyclotomicScalar(int value);  // NOLINT(google-explicit-constructor)
  CyclotomicScalar(long value);  // NOLINT(google-explicit-constructor)
  CyclotomicScalar(Rational value);  // NOLINT(google-explicit-constructor)

  static CyclotomicScalar zeta_power(int lambda, long exponent);

  int lambda() const { return lambda_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Coefficient of ζ^k, 0 ≤ k < λ (k = 0 only for untyped values).
  Rational coefficient(int k) const;

  std::complex<double> evaluate() const;

  CyclotomicScalar& operator+=(const CyclotomicScalar& rhs);
  CyclotomicScalar& operator-=(const CyclotomicScalar& rhs);
  CyclotomicScalar& operator*=(const CyclotomicScalar& rhs);

  friend CyclotomicScalar operator+(CyclotomicScalar lhs, const CyclotomicScalar& rhs) { return lhs += rhs; }
  friend CyclotomicScalar operator-(CyclotomicScalar lhs, const CyclotomicScalar& rhs) { return lhs -= rhs; }
  friend CyclotomicScalar operator*(CyclotomicScalar lhs, const CyclotomicScalar& rhs) { return lhs *= rhs; }
  CyclotomicScalar operator-() const;

  friend bool operator==(const CyclotomicScalar& lhs, const CyclotomicScalar& rhs);

  /// Multiplicative inverse of a nonzero rational. Non-rational elements
  /// are not inverted (the quotient ring is not a field for every λ).
  CyclotomicScalar rational_inverse() const;

  std::string to_string() const;

 private:
  void promote(int lambda);
  void adopt(const CyclotomicScalar& other);

  int lambda_ = 0;
  // size λ when typed, size 1 (the rational part) when untyped.
  std::vector<Rational> coeffs_{Rational(0)};
};

}  // namespace cxosc
