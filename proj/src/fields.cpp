#include "cxosc/fields.hpp"

#include <stdexcept>

namespace cxosc {

SymbolicField::SymbolicField(int lambda) : lambda_(lambda) {
  if (lambda_ < 2) {
    throw std::invalid_argument("lambda must be >= 2");
  }
}

GammaPolynomial SymbolicField::alpha(long mu) const {
  GammaPolynomial sum;
  for (int r = 1; r < lambda_; ++r) {
    sum += zeta_power(2 * mu * r) * gamma(r);
  }
  return sum;
}

}  // namespace cxosc
