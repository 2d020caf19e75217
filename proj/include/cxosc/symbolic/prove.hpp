#pragma once

#include <optional>
#include <string>

#include "cxosc/symbolic/normal_form.hpp"

namespace cxosc::symbolic {

enum class ProofKind { exact_group_ring, field_numeric, fail };

std::string to_string(ProofKind kind);

/// Outcome of comparing two normal forms.
///
/// exact_group_ring: identical canonical normal forms.
/// field_numeric: they differ in the exact ring, but every cyclotomic
///   coefficient of the difference vanishes at ζ = e^{iπ/λ} to tolerance.
/// fail: some word keeps a nonzero coefficient; `witness` is the first one.
struct ProofStatus {
  ProofKind kind = ProofKind::fail;
  /// Largest |coefficient| of the difference after evaluating ζ (γ kept formal).
  double residual = 0.0;
  std::optional<WordKey> witness;
  std::string witness_difference;

  bool holds() const { return kind != ProofKind::fail; }
  std::string to_string() const;
};

ProofStatus compare_normal_forms(const NormalForm& lhs, const NormalForm& rhs, double tol = 1e-12);

ProofStatus prove_identity(const Expr& lhs, const Expr& rhs, int lambda, double tol = 1e-12);

}  // namespace cxosc::symbolic
