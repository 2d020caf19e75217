#pragma once

#include <stdexcept>
#include <string>

#include "cxosc/band_operator.hpp"
#include "cxosc/fields.hpp"

namespace cxosc {

inline constexpr long kDefaultWindowLo = -32;
inline constexpr long kDefaultWindowHi = 32;
inline constexpr long kMinimumWindowReach = 8;

/// Windowed bilateral module: basis |n⟩ for n in [n_min, n_max] ⊂ Z with
///   a†|n⟩ = |n+1⟩,  (a†)⁻¹|n⟩ = |n−1⟩,  a|n⟩ = F(n)|n−1⟩,  K|n⟩ = e^{2πin/λ}|n⟩,
/// F extended to negative n by the backward recursion. This is an algebraic
/// module, not an inner-product representation: a is not the adjoint of a†.
/// Negative powers of a† are what FFZ generators and e_m with m ≤ −2 need.
template <class Field>
class BilateralRep {
 public:
  using Scalar = typename Field::Scalar;
  using Operator = BandOperator<Scalar>;
  using Vector = typename Operator::Vector;

  BilateralRep(Field field, long n_min, long n_max)
      : field_(std::move(field)),
        window_{n_min, n_max},
        a_(window_),
        a_dag_(window_),
        a_dag_inv_(window_),
        K_(window_),
        N_(window_),
        identity_(Operator::identity(window_)) {
    if (n_min > -kMinimumWindowReach || n_max < kMinimumWindowReach) {
      throw std::invalid_argument("bilateral window must contain [-" + std::to_string(kMinimumWindowReach) +
                                  ", " + std::to_string(kMinimumWindowReach) + "]");
    }
    const auto size = window_.size();
    Vector f(size);
    Vector ones = Vector::Constant(size, field_.integer(1));
    Vector phase(size);
    Vector number(size);
    // F on the window by walking the recursion outward from F(0) = 0.
    f(window_.index(0)) = field_.integer(0);
    for (long n = 0; n < n_max; ++n) {
      f(window_.index(n + 1)) = f(window_.index(n)) + field_.integer(1) + field_.alpha(n);
    }
    for (long n = 0; n > n_min; --n) {
      f(window_.index(n - 1)) = f(window_.index(n)) - (field_.integer(1) + field_.alpha(n - 1));
    }
    for (long n = n_min; n <= n_max; ++n) {
      phase(window_.index(n)) = cyclic_phase(field_, n, 1);
      number(window_.index(n)) = field_.integer(n);
    }
    structure_ = f;
    a_ = Operator::shift(window_, -1, f);
    a_dag_ = Operator::shift(window_, 1, ones);
    a_dag_inv_ = Operator::shift(window_, -1, ones);
    K_ = Operator::shift(window_, 0, phase);
    N_ = Operator::shift(window_, 0, number);
  }

  const Field& field() const { return field_; }
  int lambda() const { return field_.lambda(); }
  const Window& window() const { return window_; }

  const Operator& a() const { return a_; }
  const Operator& a_dag() const { return a_dag_; }
  const Operator& a_dag_inv() const { return a_dag_inv_; }
  const Operator& K() const { return K_; }
  const Operator& N() const { return N_; }
  const Operator& identity() const { return identity_; }

  /// F(n) for n inside the window.
  Scalar F(long n) const { return structure_(window_.index(n)); }

  /// K^s for any integer s (K⁻¹ = K^{λ−1}).
  Operator K_power(long s) const {
    Vector phase(window_.size());
    for (long n = window_.lo; n <= window_.hi; ++n) {
      phase(window_.index(n)) = cyclic_phase(field_, n, s);
    }
    return Operator::shift(window_, 0, phase);
  }

  /// (a†)^p a^q K^s; negative p uses (a†)⁻¹. Throws std::out_of_range when
  /// the window leaves no valid source states.
  Operator monomial(long p, long q, long s) const {
    if (q < 0) {
      throw std::invalid_argument("monomial: power of a must be non-negative");
    }
    Operator out = K_power(s);
    for (long i = 0; i < q; ++i) {
      out = a_ * out;
    }
    const Operator& raise = p >= 0 ? a_dag_ : a_dag_inv_;
    for (long i = 0; i < std::abs(p); ++i) {
      out = raise * out;
    }
    if (!out.has_interior()) {
      throw std::out_of_range("monomial: window too small for (a†)^" + std::to_string(p) + " a^" +
                              std::to_string(q));
    }
    return out;
  }

 private:
  Field field_;
  Window window_;
  Vector structure_;
  Operator a_;
  Operator a_dag_;
  Operator a_dag_inv_;
  Operator K_;
  Operator N_;
  Operator identity_;
};

using NumericBilateral = BilateralRep<NumericField>;
using ExactBilateral = BilateralRep<SymbolicField>;

inline NumericBilateral build_bilateral(const AlgebraParams& params, long n_min = kDefaultWindowLo,
                                        long n_max = kDefaultWindowHi) {
  return NumericBilateral(NumericField(params), n_min, n_max);
}

inline ExactBilateral build_exact_bilateral(int lambda, long n_min = kDefaultWindowLo,
                                            long n_max = kDefaultWindowHi) {
  return ExactBilateral(SymbolicField(lambda), n_min, n_max);
}

}  // namespace cxosc
