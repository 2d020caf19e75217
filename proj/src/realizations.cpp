#include "cxosc/realizations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cxosc {

using Op = BandOperator<Complex>;

namespace {

constexpr Complex kI{0.0, 1.0};

Complex omega(long k, int lambda) {
  long r = k % lambda;
  if (r < 0) {
    r += lambda;
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / lambda);
}

Complex zeta(long k, int lambda) {
  const long order = 2L * lambda;
  long r = k % order;
  if (r < 0) {
    r += order;
  }
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / lambda);
}

Json pair_indices(int lambda, FFZIndex m, FFZIndex n) {
  return {{"lambda", lambda}, {"m", to_json(m)}, {"n", to_json(n)}, {"wedge", wedge(m, n)}};
}

VerificationEntry entry(std::string suite, std::string identity, Json indices, std::vector<Candidate> candidates,
                        long margin, double tol, std::string note = {}) {
  VerificationEntry e;
  e.suite = std::move(suite);
  e.identity = std::move(identity);
  e.indices = std::move(indices);
  e.candidates = std::move(candidates);
  e.margin = margin;
  e.tol = tol;
  e.note = std::move(note);
  return e;
}

Json gamma_json(const AlgebraParams& params) {
  Json out = Json::array();
  for (const auto& g : params.gamma()) {
    out.push_back({g.real(), g.imag()});
  }
  return out;
}

Json virasoro_indices(const NumericBilateral& rep, long m, long n) {
  return {{"lambda", rep.lambda()}, {"m", m}, {"n", n}, {"gamma", gamma_json(rep.field().params())}};
}

}  // namespace

Json to_json(FFZIndex m) { return Json::array({m.m1, m.m2}); }

double ffz_product_residual(const NumericBilateral& rep, FFZIndex m, FFZIndex n, int phase_sign) {
  const int lambda = rep.lambda();
  const Op lhs = ffz_generator(rep, m) * ffz_generator(rep, n);
  const Op rhs = zeta(phase_sign * wedge(m, n), lambda) * ffz_generator(rep, m + n);
  return interior_residual(lhs, rhs);
}

VerificationEntry verify_ffz_product(const NumericBilateral& rep, FFZIndex m, FFZIndex n, double tol) {
  const Op lhs = ffz_generator(rep, m) * ffz_generator(rep, n);
  return entry("ffz", "T_m*T_n=exp(-i pi (m^n)/lambda)*T_(m+n)", pair_indices(rep.lambda(), m, n),
               {{"paper", Role::paper, ffz_product_residual(rep, m, n, -1)}}, lhs.margin(), tol);
}

VerificationEntry verify_ffz_commutator(const NumericBilateral& rep, FFZIndex m, FFZIndex n, double tol) {
  const int lambda = rep.lambda();
  const Op bracket = commutator(ffz_generator(rep, m), ffz_generator(rep, n));
  const double angle = std::numbers::pi * static_cast<double>(wedge(m, n)) / lambda;
  const Op rhs = (-2.0 * kI * std::sin(angle)) * ffz_generator(rep, m + n);
  return entry("ffz", "[T_m,T_n]=-2i sin(pi (m^n)/lambda)*T_(m+n)", pair_indices(lambda, m, n),
               {{"paper", Role::paper, interior_residual(bracket, rhs)}}, bracket.margin(), tol);
}

double classical_limit_deviation(const NumericBilateral& rep, FFZIndex m, FFZIndex n) {
  const int lambda = rep.lambda();
  const Op bracket = commutator(ffz_generator(rep, m), ffz_generator(rep, n));
  const Op target = ffz_generator(rep, m + n);
  const double x = std::numbers::pi / lambda * static_cast<double>(wedge(m, n));
  return interior_residual(bracket, (-2.0 * kI * x) * target) / interior_norm(target);
}

UtSl2Realization utsl2_generators(const NumericBilateral& rep, FFZIndex m, FFZIndex n) {
  const int lambda = rep.lambda();
  const long w = wedge(m, n);
  if (w % lambda == 0) {
    throw std::invalid_argument("degenerate U_t(sl(2)) pair: wedge = " + std::to_string(w) +
                                " = 0 mod lambda, t - 1/t = 0");
  }
  const Complex t = zeta(-w, lambda);
  const Complex scale = 1.0 / (t - 1.0 / t);
  return UtSl2Realization{lambda,
                          m,
                          n,
                          t,
                          rep.window(),
                          scale * (ffz_generator(rep, m) + ffz_generator(rep, n)),
                          scale * (ffz_generator(rep, -m) + ffz_generator(rep, -n)),
                          ffz_generator(rep, m - n),
                          ffz_generator(rep, n - m)};
}

bool utsl2_inverse_exact(const UtSl2Realization& realization) {
  const auto exact = ExactBilateral(SymbolicField(realization.lambda), realization.window.lo, realization.window.hi);
  const auto H = ffz_generator(exact, realization.m - realization.n);
  const auto Hinv = ffz_generator(exact, realization.n - realization.m);
  const auto& I = exact.identity();
  return !first_interior_difference(H * Hinv, I) && !first_interior_difference(Hinv * H, I);
}

std::vector<VerificationEntry> verify_utsl2(const UtSl2Realization& r, double tol) {
  std::vector<VerificationEntry> out;
  Json indices = pair_indices(r.lambda, r.m, r.n);
  indices["t"] = {r.t.real(), r.t.imag()};
  const Op I = Op::identity(r.window);

  Json inverse_indices = indices;
  inverse_indices["exact"] = utsl2_inverse_exact(r);
  const Op hh = r.H * r.Hinv;
  out.push_back(entry("utsl2", "H*Hinv=Hinv*H=I", inverse_indices,
                      {{"paper", Role::paper, std::max(interior_residual(hh, I), interior_residual(r.Hinv * r.H, I))}},
                      hh.margin(), tol));

  const Op conj_plus = r.H * r.Xp * r.Hinv;
  out.push_back(entry("utsl2", "H*X+*Hinv=t^2*X+", indices,
                      {{"paper", Role::paper, interior_residual(conj_plus, (r.t * r.t) * r.Xp)}}, conj_plus.margin(),
                      tol));
  const Op conj_minus = r.H * r.Xm * r.Hinv;
  out.push_back(entry("utsl2", "H*X-*Hinv=t^-2*X-", indices,
                      {{"paper", Role::paper, interior_residual(conj_minus, (1.0 / (r.t * r.t)) * r.Xm)}},
                      conj_minus.margin(), tol));

  const Op bracket = commutator(r.Xp, r.Xm);
  const Op quantum = (1.0 / (r.t - 1.0 / r.t)) * (r.H - r.Hinv);
  out.push_back(entry("utsl2", "[X+,X-]=(H-Hinv)/(t-1/t)", indices,
                      {{"paper", Role::paper, interior_residual(bracket, quantum)},
                       {"derived", Role::derived, interior_residual(bracket, -quantum)}},
                      bracket.margin(), tol, "derived: [X+,X-] = -(H-Hinv)/(t-1/t)"));
  return out;
}

Eigen::MatrixXcd virasoro_generator(const TruncatedFockRep& rep, long m) {
  if (m < -1) {
    throw std::invalid_argument("e_" + std::to_string(m) + " needs negative powers of ad; use the bilateral backend");
  }
  Eigen::MatrixXcd out = rep.a;
  for (long i = 0; i <= m; ++i) {
    out = rep.a_dag * out;
  }
  return out;
}

Complex phase_sum(int lambda, long r, long k) {
  Complex sum{};
  if (k >= 0) {
    for (long s = 0; s < k; ++s) {
      sum += omega(r * s, lambda);
    }
  } else {
    for (long s = k; s < 0; ++s) {
      sum -= omega(r * s, lambda);
    }
  }
  return sum;
}

VerificationEntry verify_virasoro(const NumericBilateral& rep, long m, long n, double tol) {
  const int lambda = rep.lambda();
  const auto& params = rep.field().params();
  const Op em = virasoro_generator(rep, m);
  const Op en = virasoro_generator(rep, n);
  const Op emn = virasoro_generator(rep, m + n);
  const Op bracket = commutator(em, en);

  Op stated_correction(rep.window());
  Op derived_correction(rep.window());
  for (int r = 1; r < lambda; ++r) {
    const Op Kr = rep.K_power(r);
    const Complex stated = (omega((n + 1) * r, lambda) - omega((m + 1) * r, lambda)) * params.gamma(r);
    stated_correction += stated * (Kr * emn);
    const Complex derived =
        params.gamma(r) * (phase_sum(lambda, r, n + 1) - phase_sum(lambda, r, m + 1)) * omega(-r, lambda);
    derived_correction += derived * (emn * Kr);
  }
  const Op candidate_a = static_cast<double>(m - n) * emn + stated_correction;
  const Op candidate_b = static_cast<double>(n - m) * emn + stated_correction;
  const Op candidate_c = static_cast<double>(n - m) * emn + derived_correction;
  return entry("virasoro", "[e_m,e_n]", virasoro_indices(rep, m, n),
               {{"paper", Role::paper, interior_residual(bracket, candidate_a)},
                {"paper_leading_n_minus_m", Role::paper, interior_residual(bracket, candidate_b)},
                {"derived", Role::derived, interior_residual(bracket, candidate_c)}},
               bracket.margin(), tol);
}

VerificationEntry verify_witt_limit(const NumericBilateral& rep, long m, long n, double tol) {
  const Op bracket = commutator(virasoro_generator(rep, m), virasoro_generator(rep, n));
  const Op emn = virasoro_generator(rep, m + n);
  return entry("virasoro", "witt_limit", virasoro_indices(rep, m, n),
               {{"paper", Role::paper, interior_residual(bracket, static_cast<double>(m - n) * emn)},
                {"derived", Role::derived, interior_residual(bracket, static_cast<double>(n - m) * emn)}},
               bracket.margin(), tol);
}

VerificationEntry verify_em_K(const NumericBilateral& rep, long m, double tol) {
  const int lambda = rep.lambda();
  const Op em = virasoro_generator(rep, m);
  const Op bracket = commutator(em, rep.K());
  const Op emK = em * rep.K();
  return entry("emk", "[e_m,K]=(1-exp(2 pi i k/lambda))*e_m*K", virasoro_indices(rep, m, m),
               {{"paper", Role::paper, interior_residual(bracket, (1.0 - omega(m + 1, lambda)) * emK)},
                {"derived", Role::derived, interior_residual(bracket, (1.0 - omega(m, lambda)) * emK)}},
               bracket.margin(), tol, "paper: k = m+1; derived: k = m");
}

VerificationEntry verify_annihilator_power(const NumericBilateral& rep, long m, double tol) {
  if (m < 1) {
    throw std::invalid_argument("verify_annihilator_power: m must be >= 1");
  }
  const int lambda = rep.lambda();
  const auto& params = rep.field().params();
  const Op raise = rep.monomial(m, 0, 0);
  const Op lower_raise = rep.monomial(m - 1, 0, 0);
  const Op bracket = commutator(rep.a(), raise);
  Op factor = static_cast<double>(m) * rep.identity();
  for (int r = 1; r < lambda; ++r) {
    factor += (phase_sum(lambda, r, m) * params.gamma(r)) * rep.K_power(r);
  }
  Json indices = {{"lambda", lambda}, {"m", m}, {"gamma", gamma_json(params)}};
  return entry("virasoro", "[a,ad^m]=(m+sum f_r g_r K^r)ad^(m-1)", indices,
               {{"paper", Role::paper, interior_residual(bracket, factor * lower_raise)},
                {"derived", Role::derived, interior_residual(bracket, lower_raise * factor)}},
               bracket.margin(), tol, "paper: K^r left of ad^(m-1); derived: K^r right");
}

VerificationEntry verify_commutator_adjoint_pair(const NumericBilateral& rep, long m, double tol) {
  if (rep.lambda() != 2) {
    throw std::invalid_argument("verify_commutator_adjoint_pair needs lambda = 2");
  }
  const auto& params = rep.field().params();
  const Op bracket = commutator(rep.a(), rep.monomial(m, 0, 0));
  const Op lower_raise = rep.monomial(m - 1, 0, 0);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const Op factor = static_cast<double>(m) * rep.identity() + (0.5 * (1.0 - sign) * params.gamma(1)) * rep.K();
  Json indices = {{"lambda", 2}, {"m", m}, {"gamma", gamma_json(params)}};
  return entry("calogero", "[a,ad^m]=(m+(1-(-1)^m)/2*g1*K)ad^(m-1)", indices,
               {{"paper", Role::paper, interior_residual(bracket, factor * lower_raise)},
                {"derived", Role::derived, interior_residual(bracket, lower_raise * factor)}},
               bracket.margin(), tol, "paper: K left of ad^(m-1); derived: K right");
}

namespace {

double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

VerificationEntry verify_calogero_virasoro(const NumericBilateral& rep, long m, long n, double tol) {
  if (rep.lambda() != 2) {
    throw std::invalid_argument("verify_calogero_virasoro needs lambda = 2");
  }
  const Complex g = rep.field().params().gamma(1);
  const Op bracket = commutator(virasoro_generator(rep, m), virasoro_generator(rep, n));
  const Op emn = virasoro_generator(rep, m + n);
  const Op correction = (0.5 * (parity(n) - parity(m)) * g) * (rep.K() * emn);
  return entry("calogero", "[e_m,e_n] (lambda=2)", virasoro_indices(rep, m, n),
               {{"paper", Role::paper, interior_residual(bracket, static_cast<double>(m - n) * emn + correction)},
                {"derived", Role::derived, interior_residual(bracket, static_cast<double>(n - m) * emn + correction)}},
               bracket.margin(), tol, "derived: leading coefficient (n-m)");
}

VerificationEntry verify_calogero_correction(const NumericBilateral& rep, long m, long n, double tol) {
  if (rep.lambda() != 2) {
    throw std::invalid_argument("verify_calogero_correction needs lambda = 2");
  }
  const Complex g = rep.field().params().gamma(1);
  const Op emn = virasoro_generator(rep, m + n);
  const Op bracket = commutator(virasoro_generator(rep, m), virasoro_generator(rep, n));
  const Op deformation = bracket - static_cast<double>(n - m) * emn;
  const double c = 0.5 * (parity(n) - parity(m));
  return entry("calogero", "correction term after K reordering", virasoro_indices(rep, m, n),
               {{"paper", Role::paper, interior_residual(deformation, (c * g) * (rep.K() * emn))},
                {"derived", Role::derived, interior_residual(deformation, (-c * g) * (emn * rep.K()))}},
               deformation.margin(), tol, "paper: K e_(m+n); derived: e_(m+n) K");
}

}  // namespace cxosc
