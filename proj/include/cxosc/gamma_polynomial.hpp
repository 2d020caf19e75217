#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cxosc/cyclotomic.hpp"

namespace cxosc {

/// Product of formal symbols γ_r^{e_r}, stored sparsely as sorted (r, e_r)
/// pairs with e_r > 0. The empty monomial is 1.
using GammaMonomial = std::vector<std::pair<int, int>>;

std::string to_string(const GammaMonomial& monomial);

/// Polynomial in commuting formal symbols γ_1..γ_{λ−1} with exact
/// cyclotomic coefficients. The conjugation constraint γ_r* = γ_{λ−r} is not
/// imposed; identities proved here hold identically in the γ's.
class GammaPolynomial {
 public:
  using Terms = std::map<GammaMonomial, CyclotomicScalar>;

  GammaPolynomial() = default;
  GammaPolynomial(int value);  // NOLINT(google-explicit-constructor)
  GammaPolynomial(long value);  // NOLINT(google-explicit-constructor)
  GammaPolynomial(Rational value);  // NOLINT(google-explicit-constructor)
  GammaPolynomial(CyclotomicScalar value);  // NOLINT(google-explicit-constructor)

  /// The formal symbol γ_r.
  static GammaPolynomial symbol(int r);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty monomial.
  CyclotomicScalar constant_term() const;

  /// Numeric value with gamma[r-1] substituted for γ_r.
  std::complex<double> evaluate(std::span<const std::complex<double>> gamma) const;

  GammaPolynomial& operator+=(const GammaPolynomial& rhs);
  GammaPolynomial& operator-=(const GammaPolynomial& rhs);
  GammaPolynomial& operator*=(const GammaPolynomial& rhs);
  friend GammaPolynomial operator+(GammaPolynomial lhs, const GammaPolynomial& rhs) { return lhs += rhs; }
  friend GammaPolynomial operator-(GammaPolynomial lhs, const GammaPolynomial& rhs) { return lhs -= rhs; }
  friend GammaPolynomial operator*(const GammaPolynomial& lhs, const GammaPolynomial& rhs);
  GammaPolynomial operator-() const;

  friend bool operator==(const GammaPolynomial& lhs, const GammaPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const GammaMonomial& monomial, const CyclotomicScalar& coeff);

  Terms terms_;
};

}  // namespace cxosc

namespace Eigen {

template <>
struct NumTraits<cxosc::GammaPolynomial> : GenericNumTraits<cxosc::GammaPolynomial> {
  using Real = cxosc::GammaPolynomial;
  using NonInteger = cxosc::GammaPolynomial;
  using Nested = cxosc::GammaPolynomial;
  using Literal = cxosc::GammaPolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
};

}  // namespace Eigen
