#include "cxosc/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cxosc {

using Eigen::MatrixXcd;

std::string to_string(Normalization normalization) {
  return normalization == Normalization::square_root ? "square_root" : "module";
}

namespace {

Complex omega_power(long k, int lambda) {
  long r = k % lambda;
  if (r < 0) {
    r += lambda;
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / lambda);
}

MatrixXcd matrix_power(const MatrixXcd& m, int exponent) {
  MatrixXcd out = MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < exponent; ++i) {
    out = out * m;
  }
  return out;
}

}  // namespace

TruncatedFockRep build_fock_rep(const AlgebraParams& params, int dim, NormalizationPolicy policy) {
  const int lambda = params.lambda();
  if (dim < 2 * lambda) {
    throw std::invalid_argument("Fock dimension must be at least 2*lambda");
  }
  if (dim > kMaxFockDim) {
    throw std::invalid_argument("Fock dimension must not exceed " + std::to_string(kMaxFockDim));
  }
  const bool unitary = fock_is_unitary(params, dim - 1);
  const bool square_root = unitary && policy == NormalizationPolicy::automatic;

  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  MatrixXcd a_dag = MatrixXcd::Zero(dim, dim);
  MatrixXcd N = MatrixXcd::Zero(dim, dim);
  MatrixXcd K = MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    N(n, n) = static_cast<double>(n);
    K(n, n) = omega_power(n, lambda);
    if (n + 1 < dim) {
      const double f_next = structure_function(params, n + 1);
      if (square_root) {
        a_dag(n + 1, n) = std::sqrt(f_next);
        a(n, n + 1) = std::sqrt(f_next);
      } else {
        a_dag(n + 1, n) = 1.0;
        a(n, n + 1) = f_next;
      }
    }
  }
  auto P = projectors_from_cyclic(K, lambda);
  return TruncatedFockRep{params,
                          dim,
                          square_root ? Normalization::square_root : Normalization::module,
                          square_root,
                          std::move(a),
                          std::move(a_dag),
                          std::move(N),
                          std::move(K),
                          std::move(P)};
}

std::vector<MatrixXcd> projectors_from_cyclic(const MatrixXcd& K, int lambda) {
  std::vector<MatrixXcd> P;
  P.reserve(static_cast<std::size_t>(lambda));
  for (int mu = 0; mu < lambda; ++mu) {
    MatrixXcd sum = MatrixXcd::Zero(K.rows(), K.cols());
    MatrixXcd power = MatrixXcd::Identity(K.rows(), K.cols());
    for (int r = 0; r < lambda; ++r) {
      sum += omega_power(-static_cast<long>(mu) * r, lambda) * power;
      power = power * K;
    }
    P.push_back(sum / static_cast<double>(lambda));
  }
  return P;
}

MatrixXcd hamiltonian(const TruncatedFockRep& rep) {
  return 0.5 * (rep.a_dag * rep.a + rep.a * rep.a_dag);
}

std::vector<std::pair<long, double>> spectrum_closed_form(const AlgebraParams& params, long n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("spectrum_closed_form: n_max must be >= 0");
  }
  std::vector<std::pair<long, double>> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    out.emplace_back(n, closed_form_energy(params, n));
  }
  return out;
}

std::vector<double> diagonalized_levels(const TruncatedFockRep& rep) {
  const int interior = rep.dim - 1;
  const MatrixXcd block = hamiltonian(rep).topLeftCorner(interior, interior);
  Eigen::VectorXd values(interior);
  MatrixXcd vectors(interior, interior);
  if (rep.unitary) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(block);
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<MatrixXcd> solver(block);
    values = solver.eigenvalues().real();
    vectors = solver.eigenvectors();
  }
  std::vector<double> levels(static_cast<std::size_t>(interior));
  for (int n = 0; n < interior; ++n) {
    Eigen::Index best = 0;
    vectors.row(n).cwiseAbs().maxCoeff(&best);
    levels[static_cast<std::size_t>(n)] = values(best);
  }
  return levels;
}

std::vector<SpectrumRow> spectrum_table(const TruncatedFockRep& rep, long levels) {
  const auto diag = diagonalized_levels(rep);
  if (levels > static_cast<long>(diag.size())) {
    throw std::invalid_argument("spectrum_table: more levels requested than interior states");
  }
  std::vector<SpectrumRow> rows;
  const long lambda = rep.params.lambda();
  for (long n = 0; n < levels; ++n) {
    const double closed = closed_form_energy(rep.params, n);
    const double numeric = diag[static_cast<std::size_t>(n)];
    rows.push_back({n, n / lambda, n % lambda, closed, numeric, std::abs(closed - numeric)});
  }
  return rows;
}

double interior_residual(const MatrixXcd& x, const MatrixXcd& y, int margin) {
  const Eigen::Index cols = x.cols() - margin;
  if (cols <= 0) {
    throw std::domain_error("interior_residual: margin leaves no interior columns");
  }
  return (x - y).leftCols(cols).colwise().norm().maxCoeff();
}

std::vector<VerificationEntry> verify_gdoa(const TruncatedFockRep& rep, double tol) {
  const int lambda = rep.params.lambda();
  const int dim = rep.dim;
  const MatrixXcd I = MatrixXcd::Identity(dim, dim);
  const MatrixXcd zero = MatrixXcd::Zero(dim, dim);
  std::vector<VerificationEntry> out;
  Json indices = {{"lambda", lambda}, {"dim", dim}, {"normalization", to_string(rep.normalization)}};

  auto add = [&](const std::string& id, double residual, int margin) {
    VerificationEntry entry;
    entry.suite = "gdoa";
    entry.identity = id;
    entry.indices = indices;
    entry.candidates = {{"paper", Role::paper, residual}};
    entry.margin = margin;
    entry.tol = tol;
    out.push_back(std::move(entry));
  };

  add("[N,ad]=ad", interior_residual(rep.N * rep.a_dag - rep.a_dag * rep.N, rep.a_dag, 1), 1);
  add("[N,K]=0", interior_residual(rep.N * rep.K - rep.K * rep.N, zero, 0), 0);
  add("K^lambda=I", interior_residual(matrix_power(rep.K, lambda), I, 0), 0);

  MatrixXcd gamma_form = I;
  MatrixXcd alpha_form = I;
  MatrixXcd k_power = I;
  for (int r = 1; r < lambda; ++r) {
    k_power = k_power * rep.K;
    gamma_form += rep.params.gamma(r) * k_power;
  }
  for (int mu = 0; mu < lambda; ++mu) {
    alpha_form += rep.params.alpha(mu) * rep.P[static_cast<std::size_t>(mu)];
  }
  const MatrixXcd bracket = rep.a * rep.a_dag - rep.a_dag * rep.a;
  add("[a,ad]=I+sum(g_r K^r)=I+sum(alpha_mu P_mu)",
      std::max({interior_residual(bracket, gamma_form, 1), interior_residual(bracket, alpha_form, 1),
                interior_residual(gamma_form, alpha_form, 0)}),
      1);

  add("ad*K=exp(-2pi i/lambda)*K*ad",
      interior_residual(rep.a_dag * rep.K, omega_power(-1, lambda) * rep.K * rep.a_dag, 1), 1);

  double shift_residual = 0.0;
  double orthogonality = 0.0;
  MatrixXcd total = zero;
  for (int mu = 0; mu < lambda; ++mu) {
    const auto& p_mu = rep.P[static_cast<std::size_t>(mu)];
    const auto& p_next = rep.P[static_cast<std::size_t>((mu + 1) % lambda)];
    shift_residual = std::max(shift_residual, interior_residual(rep.a_dag * p_mu, p_next * rep.a_dag, 1));
    for (int nu = 0; nu < lambda; ++nu) {
      const auto& p_nu = rep.P[static_cast<std::size_t>(nu)];
      orthogonality = std::max(orthogonality, interior_residual(p_mu * p_nu, mu == nu ? p_nu : zero, 0));
    }
    total += p_mu;
  }
  add("ad*P_mu=P_(mu+1)*ad", shift_residual, 1);
  add("P_mu*P_nu=delta*P_nu", orthogonality, 0);
  add("sum(P_mu)=I", interior_residual(total, I, 0), 0);
  return out;
}

}  // namespace cxosc
