#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cxosc/params.hpp"
#include "cxosc/report.hpp"

namespace cxosc {

inline constexpr int kMaxFockDim = 256;

enum class NormalizationPolicy { automatic, module };
enum class Normalization { square_root, module };

std::string to_string(Normalization normalization);

/// Truncated unilateral Fock representation on |0⟩..|D−1⟩.
///
/// K = e^{2πiN/λ} and the projectors P_μ are built from K by averaging over
/// the cyclic group, so the projector identities are genuine checks.
struct TruncatedFockRep {
  AlgebraParams params;
  int dim;
  Normalization normalization;
  bool unitary;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd a_dag;
  Eigen::MatrixXcd N;
  Eigen::MatrixXcd K;
  std::vector<Eigen::MatrixXcd> P;
};

/// Square-root normalization when F(n) > 0 for 1 ≤ n ≤ D−1 (unless the
/// policy forces module form); module normalization a†|n⟩ = |n+1⟩,
/// a|n⟩ = F(n)|n−1⟩ otherwise. Throws std::invalid_argument unless 2λ ≤ D ≤ 256.
TruncatedFockRep build_fock_rep(const AlgebraParams& params, int dim,
                                NormalizationPolicy policy = NormalizationPolicy::automatic);

/// P_μ = (1/λ) Σ_r e^{−2πiμr/λ} K^r.
std::vector<Eigen::MatrixXcd> projectors_from_cyclic(const Eigen::MatrixXcd& K, int lambda);

/// H₀ = ½(a†a + a a†).
Eigen::MatrixXcd hamiltonian(const TruncatedFockRep& rep);

/// (n, E_n) for n = 0..n_max from the closed form.
std::vector<std::pair<long, double>> spectrum_closed_form(const AlgebraParams& params, long n_max);

/// H₀ eigenvalue attached to each interior state n = 0..D−2, read off the
/// eigen-decomposition of the interior block (eigenvector with the largest
/// weight on |n⟩).
std::vector<double> diagonalized_levels(const TruncatedFockRep& rep);

struct SpectrumRow {
  long n;
  long k;
  long mu;
  double closed;
  double diagonalized;
  double delta;
};

std::vector<SpectrumRow> spectrum_table(const TruncatedFockRep& rep, long levels);

/// Max column norm of (X − Y) over columns 0..D−1−margin.
double interior_residual(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y, int margin);

/// The eight defining and projector identities, one entry each, asserted on
/// interior states only.
std::vector<VerificationEntry> verify_gdoa(const TruncatedFockRep& rep, double tol);

}  // namespace cxosc
