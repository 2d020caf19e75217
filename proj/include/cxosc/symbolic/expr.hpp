#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cxosc/gamma_polynomial.hpp"

namespace cxosc::symbolic {

enum class Generator { a, ad, K, I };

std::string to_string(Generator generator);

struct ExprNode;

/// Immutable operator expression over {a, a†, K, I} with exact scalar
/// literals. Cheap to copy; subtrees are shared.
class Expr {
 public:
  explicit Expr(ExprNode node);

  static Expr atom(Generator generator);
  static Expr literal(GammaPolynomial value, std::string text);
  static Expr sum(std::vector<std::pair<int, Expr>> signed_terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, long exponent);
  /// X·Y − Y·X.
  static Expr commutator(const Expr& x, const Expr& y);

  const ExprNode& node() const { return *node_; }
  std::string to_string() const;

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct AtomNode {
  Generator generator;
};

struct LiteralNode {
  GammaPolynomial value;
  std::string text;
};

struct SumNode {
  std::vector<std::pair<int, Expr>> terms;  // (±1, term)
};

struct ProductNode {
  std::vector<Expr> factors;
};

struct PowerNode {
  Expr base;
  long exponent;
};

struct ExprNode {
  std::variant<AtomNode, LiteralNode, SumNode, ProductNode, PowerNode> value;
};

}  // namespace cxosc::symbolic
