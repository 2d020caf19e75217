#include "cxosc/gamma_polynomial.hpp"

#include <stdexcept>

namespace cxosc {

std::string to_string(const GammaMonomial& monomial) {
  std::string out;
  for (const auto& [r, e] : monomial) {
    if (!out.empty()) {
      out += "*";
    }
    out += "g" + std::to_string(r);
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

GammaMonomial multiply(const GammaMonomial& lhs, const GammaMonomial& rhs) {
  GammaMonomial out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != lhs.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == lhs.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

GammaPolynomial::GammaPolynomial(int value) : GammaPolynomial(CyclotomicScalar(value)) {}
GammaPolynomial::GammaPolynomial(long value) : GammaPolynomial(CyclotomicScalar(value)) {}
GammaPolynomial::GammaPolynomial(Rational value) : GammaPolynomial(CyclotomicScalar(std::move(value))) {}
GammaPolynomial::GammaPolynomial(CyclotomicScalar value) { add_term({}, value); }

GammaPolynomial GammaPolynomial::symbol(int r) {
  if (r < 1) {
    throw std::invalid_argument("GammaPolynomial: symbol index must be >= 1");
  }
  GammaPolynomial out;
  out.terms_.emplace(GammaMonomial{{r, 1}}, CyclotomicScalar(1));
  return out;
}

CyclotomicScalar GammaPolynomial::constant_term() const {
  auto it = terms_.find(GammaMonomial{});
  return it == terms_.end() ? CyclotomicScalar{} : it->second;
}

std::complex<double> GammaPolynomial::evaluate(std::span<const std::complex<double>> gamma) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [monomial, coeff] : terms_) {
    std::complex<double> value = coeff.evaluate();
    for (const auto& [r, e] : monomial) {
      if (static_cast<std::size_t>(r) > gamma.size()) {
        throw std::out_of_range("GammaPolynomial::evaluate: missing value for g" + std::to_string(r));
      }
      for (int k = 0; k < e; ++k) {
        value *= gamma[static_cast<std::size_t>(r - 1)];
      }
    }
    sum += value;
  }
  return sum;
}

void GammaPolynomial::add_term(const GammaMonomial& monomial, const CyclotomicScalar& coeff) {
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& rhs) {
  for (const auto& [monomial, coeff] : rhs.terms_) {
    add_term(monomial, coeff);
  }
  return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& rhs) {
  for (const auto& [monomial, coeff] : rhs.terms_) {
    add_term(monomial, -coeff);
  }
  return *this;
}

GammaPolynomial operator*(const GammaPolynomial& lhs, const GammaPolynomial& rhs) {
  GammaPolynomial out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(multiply(ml, mr), cl * cr);
    }
  }
  return out;
}

GammaPolynomial& GammaPolynomial::operator*=(const GammaPolynomial& rhs) {
  return *this = *this * rhs;
}

GammaPolynomial GammaPolynomial::operator-() const {
  GammaPolynomial out = *this;
  for (auto& [monomial, coeff] : out.terms_) {
    coeff = -coeff;
  }
  return out;
}

std::string GammaPolynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [monomial, coeff] : terms_) {
    std::string c = coeff.to_string();
    const bool compound = c.find(' ') != std::string::npos;
    std::string term;
    if (monomial.empty()) {
      term = compound && terms_.size() > 1 ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = cxosc::to_string(monomial);
    } else if (c == "-1") {
      term = "-" + cxosc::to_string(monomial);
    } else {
      term = (compound ? "(" + c + ")" : c) + "*" + cxosc::to_string(monomial);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-' && !compound) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace cxosc
