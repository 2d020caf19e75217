#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cxosc/bilateral.hpp"
#include "cxosc/fock.hpp"
#include "cxosc/report.hpp"

namespace cxosc {

/// Integer pair labelling T_m, with the symplectic pairing m∧n = m₁n₂ − m₂n₁.
struct FFZIndex {
  long m1 = 0;
  long m2 = 0;

  friend FFZIndex operator+(FFZIndex x, FFZIndex y) { return {x.m1 + y.m1, x.m2 + y.m2}; }
  friend FFZIndex operator-(FFZIndex x, FFZIndex y) { return {x.m1 - y.m1, x.m2 - y.m2}; }
  FFZIndex operator-() const { return {-m1, -m2}; }
  friend bool operator==(FFZIndex, FFZIndex) = default;
};

inline long wedge(FFZIndex m, FFZIndex n) { return m.m1 * n.m2 - m.m2 * n.m1; }

Json to_json(FFZIndex m);

/// T_m = e^{iπ m₁m₂/λ} (a†)^{m₁} K^{m₂}; negative m₁ uses (a†)⁻¹.
template <class Field>
BandOperator<typename Field::Scalar> ffz_generator(const BilateralRep<Field>& rep, FFZIndex m) {
  return rep.field().zeta_power(m.m1 * m.m2) * rep.monomial(m.m1, 0, m.m2);
}

/// Residual of T_m T_n = e^{∓iπ(m∧n)/λ} T_{m+n}; phase_sign = −1 is the
/// product law, +1 the sign-flipped negative control.
double ffz_product_residual(const NumericBilateral& rep, FFZIndex m, FFZIndex n, int phase_sign = -1);

VerificationEntry verify_ffz_product(const NumericBilateral& rep, FFZIndex m, FFZIndex n, double tol);

/// [T_m, T_n] = −2i sin(π(m∧n)/λ) T_{m+n}.
VerificationEntry verify_ffz_commutator(const NumericBilateral& rep, FFZIndex m, FFZIndex n, double tol);

/// ‖[T_m,T_n] + 2i(π/λ)(m∧n) T_{m+n}‖ / ‖T_{m+n}‖: distance from the
/// undeformed torus bracket.
double classical_limit_deviation(const NumericBilateral& rep, FFZIndex m, FFZIndex n);

struct UtSl2Realization {
  int lambda;
  FFZIndex m;
  FFZIndex n;
  Complex t;
  Window window;
  BandOperator<Complex> Xp;
  BandOperator<Complex> Xm;
  BandOperator<Complex> H;
  BandOperator<Complex> Hinv;
};

/// X± = (T_{±m} + T_{±n})/(t − t⁻¹), H = T_{m−n}, H⁻¹ = T_{n−m},
/// t = e^{−iπ(m∧n)/λ}. Throws std::invalid_argument when m∧n ≡ 0 mod λ.
UtSl2Realization utsl2_generators(const NumericBilateral& rep, FFZIndex m, FFZIndex n);

/// H·H⁻¹ = H⁻¹·H = I in exact arithmetic on the realization's window.
bool utsl2_inverse_exact(const UtSl2Realization& realization);

/// H H⁻¹ = I, H X± H⁻¹ = t^{±2} X±, and [X⁺, X⁻] against both signs of
/// (H − H⁻¹)/(t − t⁻¹).
std::vector<VerificationEntry> verify_utsl2(const UtSl2Realization& realization, double tol);

/// e_m = (a†)^{m+1} a.
template <class Field>
BandOperator<typename Field::Scalar> virasoro_generator(const BilateralRep<Field>& rep, long m) {
  return rep.monomial(m + 1, 1, 0);
}

/// e_m on the truncated Fock backend; only m ≥ −1 exists there.
Eigen::MatrixXcd virasoro_generator(const TruncatedFockRep& rep, long m);

/// f_r^{(k)} = Σ_{s=0}^{k−1} e^{2πirs/λ}, extended to k < 0 by
/// f^{(k)} = −Σ_{s=k}^{−1} e^{2πirs/λ} so that f^{(k+1)} = 1 + e^{2πir/λ} f^{(k)}.
Complex phase_sum(int lambda, long r, long k);

/// [e_m, e_n] against (A) the stated bracket, (B) the stated bracket with
/// leading (n − m), (C) the form derived by direct computation.
VerificationEntry verify_virasoro(const NumericBilateral& rep, long m, long n, double tol);

/// γ → 0: [e_m, e_n] against (m − n) e_{m+n} and (n − m) e_{m+n}.
VerificationEntry verify_witt_limit(const NumericBilateral& rep, long m, long n, double tol);

/// [e_m, K] against (1 − e^{2πi(m+1)/λ}) e_m K and (1 − e^{2πim/λ}) e_m K.
VerificationEntry verify_em_K(const NumericBilateral& rep, long m, double tol);

/// [a, (a†)^m] against (m + Σ f_r γ_r K^r)(a†)^{m−1} (stated) and
/// (a†)^{m−1}(m + Σ f_r γ_r K^r).
VerificationEntry verify_annihilator_power(const NumericBilateral& rep, long m, double tol);

/// λ = 2: [a, (a†)^m] = (m + ½(1 − (−1)^m) γ₁ K)(a†)^{m−1}, both orderings.
VerificationEntry verify_commutator_adjoint_pair(const NumericBilateral& rep, long m, double tol);

/// λ = 2 bracket as stated for the K-deformed Virasoro algebra, and the
/// same with leading (n − m).
VerificationEntry verify_calogero_virasoro(const NumericBilateral& rep, long m, long n, double tol);

/// λ = 2: [e_m, e_n] − (n − m) e_{m+n} against ½((−1)^n − (−1)^m) γ₁ K e_{m+n}
/// (K on the left, stated) and −½((−1)^n − (−1)^m) γ₁ e_{m+n} K.
VerificationEntry verify_calogero_correction(const NumericBilateral& rep, long m, long n, double tol);

}  // namespace cxosc
