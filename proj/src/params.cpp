#include "cxosc/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cxosc {

namespace {

Complex unit_phase(long numerator, int lambda) {
  // e^{2πi numerator/λ} with the exponent reduced first
  long k = numerator % lambda;
  if (k < 0) {
    k += lambda;
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / lambda);
}

long floor_mod(long n, long m) {
  long r = n % m;
  return r < 0 ? r + m : r;
}

double gamma_scale(const std::vector<Complex>& gamma) {
  double scale = 1.0;
  for (const auto& g : gamma) {
    scale = std::max(scale, std::abs(g));
  }
  return scale;
}

}  // namespace

AlgebraParams::AlgebraParams(int lambda, std::vector<Complex> values)
    : lambda_(lambda), gamma_(std::move(values)) {
  if (lambda_ < 2) {
    throw std::invalid_argument("lambda must be >= 2");
  }
  if (gamma_.size() != static_cast<std::size_t>(lambda_ - 1)) {
    throw std::invalid_argument("expected " + std::to_string(lambda_ - 1) + " gamma values, got " +
                                std::to_string(gamma_.size()));
  }
  const double tol = kConstraintTolerance * gamma_scale(gamma_);
  for (int r = 1; r < lambda_; ++r) {
    if (std::abs(std::conj(gamma(r)) - gamma(lambda_ - r)) > tol) {
      throw std::invalid_argument("gamma violates conj(g" + std::to_string(r) + ") = g" +
                                  std::to_string(lambda_ - r));
    }
  }
  alpha_ = alpha_from_gamma(*this);
}

AlgebraParams AlgebraParams::undeformed(int lambda) {
  return AlgebraParams(lambda, std::vector<Complex>(static_cast<std::size_t>(std::max(lambda - 1, 0))));
}

double AlgebraParams::alpha(long mu) const {
  return alpha_[static_cast<std::size_t>(floor_mod(mu, lambda_))];
}

bool AlgebraParams::is_undeformed() const {
  return std::all_of(gamma_.begin(), gamma_.end(), [](const Complex& g) { return g == Complex{}; });
}

std::vector<double> alpha_from_gamma(const AlgebraParams& params) {
  const int lambda = params.lambda();
  const double tol = kConstraintTolerance * gamma_scale(params.gamma());
  std::vector<double> alpha(static_cast<std::size_t>(lambda));
  for (int mu = 0; mu < lambda; ++mu) {
    Complex sum{};
    for (int r = 1; r < lambda; ++r) {
      sum += unit_phase(static_cast<long>(mu) * r, lambda) * params.gamma(r);
    }
    if (std::abs(sum.imag()) > tol) {
      throw std::domain_error("alpha_" + std::to_string(mu) + " is not real; conjugation constraint violated");
    }
    alpha[static_cast<std::size_t>(mu)] = sum.real();
  }
  return alpha;
}

std::vector<Complex> gamma_from_alpha(int lambda, std::span<const double> alpha) {
  if (lambda < 2 || alpha.size() != static_cast<std::size_t>(lambda)) {
    throw std::invalid_argument("gamma_from_alpha: need lambda >= 2 and lambda alpha values");
  }
  double sum = 0.0;
  double scale = 1.0;
  for (double a : alpha) {
    sum += a;
    scale = std::max(scale, std::abs(a));
  }
  if (std::abs(sum) > kConstraintTolerance * scale) {
    throw std::invalid_argument("gamma_from_alpha: alpha must sum to zero");
  }
  std::vector<Complex> gamma(static_cast<std::size_t>(lambda - 1));
  for (int r = 1; r < lambda; ++r) {
    Complex g{};
    for (int mu = 0; mu < lambda; ++mu) {
      g += unit_phase(-static_cast<long>(mu) * r, lambda) * alpha[static_cast<std::size_t>(mu)];
    }
    gamma[static_cast<std::size_t>(r - 1)] = g / static_cast<double>(lambda);
  }
  // Snap to exact conjugate pairs so the result passes validation bit-for-bit.
  for (int r = 1; 2 * r <= lambda; ++r) {
    auto& lo = gamma[static_cast<std::size_t>(r - 1)];
    auto& hi = gamma[static_cast<std::size_t>(lambda - r - 1)];
    if (2 * r == lambda) {
      lo = {lo.real(), 0.0};
    } else {
      const Complex avg = 0.5 * (lo + std::conj(hi));
      lo = avg;
      hi = std::conj(avg);
    }
  }
  return gamma;
}

double structure_function(const AlgebraParams& params, long n) {
  double value = 0.0;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      value += 1.0 + params.alpha(k);
    }
  } else {
    for (long k = n; k < 0; ++k) {
      value -= 1.0 + params.alpha(k);
    }
  }
  return value;
}

std::vector<double> j_coefficients(const AlgebraParams& params) {
  const int lambda = params.lambda();
  std::vector<double> j(static_cast<std::size_t>(lambda));
  double prefix = 0.0;
  for (int mu = 0; mu < lambda; ++mu) {
    j[static_cast<std::size_t>(mu)] = prefix + 0.5 * params.alpha(mu);
    prefix += params.alpha(mu);
  }
  return j;
}

std::vector<Complex> j_coefficients_gamma_literal(const AlgebraParams& params) {
  const int lambda = params.lambda();
  auto gamma_at = [&](int nu) { return nu == 0 ? Complex{} : params.gamma(nu); };
  std::vector<Complex> j(static_cast<std::size_t>(lambda));
  j[0] = 0.5 * params.alpha(0);
  Complex prefix{};
  for (int mu = 1; mu < lambda; ++mu) {
    prefix += gamma_at(mu - 1);
    j[static_cast<std::size_t>(mu)] = prefix + 0.5 * gamma_at(mu);
  }
  return j;
}

double closed_form_energy(const AlgebraParams& params, long n) {
  const auto j = j_coefficients(params);
  const long mu = floor_mod(n, params.lambda());
  const long k = (n - mu) / params.lambda();
  return static_cast<double>(k * params.lambda() + mu) + j[static_cast<std::size_t>(mu)] + 0.5;
}

bool fock_is_unitary(const AlgebraParams& params, long top) {
  double value = 0.0;
  for (long n = 1; n <= top; ++n) {
    value += 1.0 + params.alpha(n - 1);
    if (!(value > 0.0)) {
      return false;
    }
  }
  return true;
}

double canonical_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

AlgebraParams random_admissible(int lambda, std::mt19937_64& rng, double scale) {
  std::vector<Complex> gamma(static_cast<std::size_t>(lambda - 1));
  auto draw = [&] { return scale * (2.0 * canonical_uniform(rng) - 1.0); };
  for (int r = 1; 2 * r <= lambda; ++r) {
    if (2 * r == lambda) {
      gamma[static_cast<std::size_t>(r - 1)] = {draw(), 0.0};
    } else {
      const double re = draw();
      const double im = draw();
      gamma[static_cast<std::size_t>(r - 1)] = {re, im};
      gamma[static_cast<std::size_t>(lambda - r - 1)] = {re, -im};
    }
  }
  return AlgebraParams(lambda, std::move(gamma));
}

}  // namespace cxosc
