#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cxosc/symbolic/expr.hpp"

namespace cxosc::symbolic {

/// Syntax or precondition error with the 0-based character offset at which
/// it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the operator expression language:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := 'a' | 'ad' | 'K' | 'I' | rational | 'w' | 'g'int
///           | '[' expr ',' expr ']' | '(' expr ')'
///
/// `w` is ζ = e^{iπ/λ} and `gr` the formal deformation parameter γ_r.
/// Commutator brackets are desugared to XY − YX. Negative powers are accepted
/// only for K, w and nonzero rationals.
Expr parse(std::string_view text, int lambda);

}  // namespace cxosc::symbolic
