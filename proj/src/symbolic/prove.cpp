#include "cxosc/symbolic/prove.hpp"

#include <algorithm>
#include <cstdio>

namespace cxosc::symbolic {

std::string to_string(ProofKind kind) {
  switch (kind) {
    case ProofKind::exact_group_ring:
      return "ExactGroupRing";
    case ProofKind::field_numeric:
      return "FieldNumeric";
    case ProofKind::fail:
      return "Fail";
  }
  return "?";
}

std::string ProofStatus::to_string() const {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3e", residual);
  switch (kind) {
    case ProofKind::exact_group_ring:
      return "ExactGroupRing";
    case ProofKind::field_numeric:
      return std::string("FieldNumeric(residual=") + buffer + ")";
    case ProofKind::fail: {
      std::string out = "Fail(witness=";
      if (witness) {
        out += "(" + std::to_string(witness->p) + "," + std::to_string(witness->q) + "," +
               std::to_string(witness->s) + ")";
      }
      return out + ", difference=" + witness_difference + ")";
    }
  }
  return "?";
}

ProofStatus compare_normal_forms(const NormalForm& lhs, const NormalForm& rhs, double tol) {
  ProofStatus status;
  if (lhs == rhs) {
    status.kind = ProofKind::exact_group_ring;
    return status;
  }
  const NormalForm difference = lhs - rhs;
  for (const auto& [key, coeff] : difference.terms()) {
    double word_residual = 0.0;
    for (const auto& [monomial, scalar] : coeff.terms()) {
      word_residual = std::max(word_residual, std::abs(scalar.evaluate()));
    }
    status.residual = std::max(status.residual, word_residual);
    if (word_residual > tol && !status.witness) {
      status.witness = key;
      status.witness_difference = coeff.to_string();
    }
  }
  status.kind = status.witness ? ProofKind::fail : ProofKind::field_numeric;
  return status;
}

ProofStatus prove_identity(const Expr& lhs, const Expr& rhs, int lambda, double tol) {
  Rewriter rewriter(lambda);
  return compare_normal_forms(rewriter.normal_order(lhs), rewriter.normal_order(rhs), tol);
}

}  // namespace cxosc::symbolic
