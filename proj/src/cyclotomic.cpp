#include "cxosc/cyclotomic.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cxosc {

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

CyclotomicScalar::CyclotomicScalar(int value) : coeffs_{Rational(value)} {}
CyclotomicScalar::CyclotomicScalar(long value) : coeffs_{Rational(value)} {}
CyclotomicScalar::CyclotomicScalar(Rational value) : coeffs_{std::move(value)} {}

CyclotomicScalar CyclotomicScalar::zeta_power(int lambda, long exponent) {
  if (lambda < 1) {
    throw std::invalid_argument("zeta_power: lambda must be positive");
  }
  const long order = 2L * lambda;
  long k = exponent % order;
  if (k < 0) {
    k += order;
  }
  CyclotomicScalar out;
  out.promote(lambda);
  if (k < lambda) {
    out.coeffs_[static_cast<std::size_t>(k)] = 1;
  } else {
    out.coeffs_[static_cast<std::size_t>(k - lambda)] = -1;
  }
  return out;
}

bool CyclotomicScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

bool CyclotomicScalar::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      return false;
    }
  }
  return true;
}

Rational CyclotomicScalar::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

std::complex<double> CyclotomicScalar::evaluate() const {
  if (lambda_ == 0) {
    return {coeffs_[0].convert_to<double>(), 0.0};
  }
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < lambda_; ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c != 0) {
      sum += c.convert_to<double>() * std::polar(1.0, std::numbers::pi * k / lambda_);
    }
  }
  return sum;
}

void CyclotomicScalar::promote(int lambda) {
  if (lambda_ == lambda) {
    return;
  }
  if (lambda_ != 0) {
    throw std::invalid_argument("CyclotomicScalar: mixing different lambda");
  }
  Rational constant = coeffs_[0];
  coeffs_.assign(static_cast<std::size_t>(lambda), Rational(0));
  coeffs_[0] = constant;
  lambda_ = lambda;
}

void CyclotomicScalar::adopt(const CyclotomicScalar& other) {
  if (other.lambda_ != 0) {
    promote(other.lambda_);
  }
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& rhs) {
  adopt(rhs);
  if (rhs.lambda_ == 0) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& rhs) {
  return *this += -rhs;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& rhs) {
  if (rhs.lambda_ == 0) {
    for (auto& c : coeffs_) {
      c *= rhs.coeffs_[0];
    }
    return *this;
  }
  if (lambda_ == 0) {
    CyclotomicScalar scaled = rhs;
    for (auto& c : scaled.coeffs_) {
      c *= coeffs_[0];
    }
    return *this = std::move(scaled);
  }
  if (lambda_ != rhs.lambda_) {
    throw std::invalid_argument("CyclotomicScalar: mixing different lambda");
  }
  const auto n = static_cast<std::size_t>(lambda_);
  std::vector<Rational> product(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) {
        continue;
      }
      const std::size_t k = i + j;
      // ζ^λ = −1
      if (k < n) {
        product[k] += coeffs_[i] * rhs.coeffs_[j];
      } else {
        product[k - n] -= coeffs_[i] * rhs.coeffs_[j];
      }
    }
  }
  coeffs_ = std::move(product);
  return *this;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

bool operator==(const CyclotomicScalar& lhs, const CyclotomicScalar& rhs) {
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  if (lhs.lambda_ != 0 && rhs.lambda_ != 0 && lhs.lambda_ != rhs.lambda_) {
    return lhs.is_zero() && rhs.is_zero();
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.coefficient(static_cast<int>(k)) != rhs.coefficient(static_cast<int>(k))) {
      return false;
    }
  }
  return true;
}

CyclotomicScalar CyclotomicScalar::rational_inverse() const {
  if (!is_rational() || coeffs_[0] == 0) {
    throw std::domain_error("CyclotomicScalar: only nonzero rationals are inverted");
  }
  CyclotomicScalar out = *this;
  out.coeffs_[0] = Rational(1) / coeffs_[0];
  return out;
}

std::string CyclotomicScalar::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (k == 1) {
      power = "w";
    } else if (k > 1) {
      power = "w^" + std::to_string(k);
    }
    if (power.empty()) {
      out += cxosc::to_string(magnitude);
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += cxosc::to_string(magnitude) + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cxosc
