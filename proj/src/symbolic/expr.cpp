#include "cxosc/symbolic/expr.hpp"

namespace cxosc::symbolic {

std::string to_string(Generator generator) {
  switch (generator) {
    case Generator::a:
      return "a";
    case Generator::ad:
      return "ad";
    case Generator::K:
      return "K";
    case Generator::I:
      return "I";
  }
  return "?";
}

Expr::Expr(ExprNode node) : node_(std::make_shared<const ExprNode>(std::move(node))) {}

Expr Expr::atom(Generator generator) { return Expr(ExprNode{AtomNode{generator}}); }

Expr Expr::literal(GammaPolynomial value, std::string text) {
  return Expr(ExprNode{LiteralNode{std::move(value), std::move(text)}});
}

Expr Expr::sum(std::vector<std::pair<int, Expr>> signed_terms) {
  return Expr(ExprNode{SumNode{std::move(signed_terms)}});
}

Expr Expr::product(std::vector<Expr> factors) { return Expr(ExprNode{ProductNode{std::move(factors)}}); }

Expr Expr::power(Expr base, long exponent) { return Expr(ExprNode{PowerNode{std::move(base), exponent}}); }

Expr Expr::commutator(const Expr& x, const Expr& y) {
  return sum({{1, product({x, y})}, {-1, product({y, x})}});
}

namespace {

struct Printer {
  std::string operator()(const AtomNode& node) const { return symbolic::to_string(node.generator); }
  std::string operator()(const LiteralNode& node) const { return node.text; }
  std::string operator()(const SumNode& node) const {
    std::string out = "(";
    for (std::size_t i = 0; i < node.terms.size(); ++i) {
      const auto& [sign, term] = node.terms[i];
      if (i > 0) {
        out += sign < 0 ? " - " : " + ";
      } else if (sign < 0) {
        out += "-";
      }
      out += term.to_string();
    }
    return out + ")";
  }
  std::string operator()(const ProductNode& node) const {
    std::string out;
    for (std::size_t i = 0; i < node.factors.size(); ++i) {
      out += (i > 0 ? "*" : "") + node.factors[i].to_string();
    }
    return out;
  }
  std::string operator()(const PowerNode& node) const {
    std::string base = node.base.to_string();
    if (std::holds_alternative<ProductNode>(node.base.node().value)) {
      base = "(" + base + ")";
    }
    return base + "^" + std::to_string(node.exponent);
  }
};

}  // namespace

std::string Expr::to_string() const { return std::visit(Printer{}, node_->value); }

}  // namespace cxosc::symbolic
