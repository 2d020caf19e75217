#include "cxosc/symbolic/parser.hpp"

#include <cctype>
#include <optional>

namespace cxosc::symbolic {

namespace {

enum class TokenKind { identifier, number, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      return {TokenKind::end, "", start};
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return {TokenKind::identifier, std::string(text_.substr(start, pos_ - start)), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      scan_digits();
      // p/q is a single rational literal
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        scan_digits();
      }
      return {TokenKind::number, std::string(text_.substr(start, pos_ - start)), start};
    }
    static constexpr std::string_view kSymbols = "+-*^[](),";
    if (kSymbols.find(c) != std::string_view::npos) {
      ++pos_;
      return {TokenKind::symbol, std::string(1, c), start};
    }
    throw ParseError(std::string("unknown character '") + c + "'", start);
  }

 private:
  void scan_digits() {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Parsed {
  Expr expr;
  // Negative powers are only meaningful for invertible atoms.
  bool invertible;
};

class Parser {
 public:
  Parser(std::string_view text, int lambda) : lexer_(text), lambda_(lambda) { advance(); }

  Expr parse_all() {
    Expr out = expression();
    if (current_.kind != TokenKind::end) {
      throw ParseError("unexpected '" + current_.text + "'", current_.position);
    }
    return out;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  bool at_symbol(char c) const { return current_.kind == TokenKind::symbol && current_.text[0] == c; }

  void expect(char c) {
    if (!at_symbol(c)) {
      const std::string found = current_.kind == TokenKind::end ? "end of input" : "'" + current_.text + "'";
      throw ParseError(std::string("expected '") + c + "' but found " + found, current_.position);
    }
    advance();
  }

  Expr expression() {
    std::vector<std::pair<int, Expr>> terms;
    int sign = 1;
    if (at_symbol('-')) {
      sign = -1;
      advance();
    }
    terms.emplace_back(sign, term());
    while (at_symbol('+') || at_symbol('-')) {
      sign = at_symbol('+') ? 1 : -1;
      advance();
      terms.emplace_back(sign, term());
    }
    if (terms.size() == 1 && terms.front().first == 1) {
      return terms.front().second;
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (at_symbol('*')) {
      advance();
      factors.push_back(factor());
    }
    if (factors.size() == 1) {
      return factors.front();
    }
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    const std::size_t start = current_.position;
    Parsed base = atom();
    if (!at_symbol('^')) {
      return base.expr;
    }
    advance();
    const long exponent = integer_exponent();
    if (exponent < 0 && !base.invertible) {
      throw ParseError("negative power of a non-invertible operator", start);
    }
    return Expr::power(base.expr, exponent);
  }

  long integer_exponent() {
    bool parenthesized = false;
    if (at_symbol('(')) {
      parenthesized = true;
      advance();
    }
    long sign = 1;
    if (at_symbol('-')) {
      sign = -1;
      advance();
    }
    if (current_.kind != TokenKind::number || current_.text.find('/') != std::string::npos) {
      throw ParseError("expected integer exponent", current_.position);
    }
    long value = 0;
    try {
      value = std::stol(current_.text);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", current_.position);
    }
    advance();
    if (parenthesized) {
      expect(')');
    }
    return sign * value;
  }

  Parsed atom() {
    const Token token = current_;
    if (token.kind == TokenKind::number) {
      advance();
      return {Expr::literal(GammaPolynomial(Rational(token.text)), token.text), Rational(token.text) != 0};
    }
    if (token.kind == TokenKind::identifier) {
      advance();
      if (token.text == "a") return {Expr::atom(Generator::a), false};
      if (token.text == "ad") return {Expr::atom(Generator::ad), false};
      if (token.text == "K") return {Expr::atom(Generator::K), true};
      if (token.text == "I") return {Expr::atom(Generator::I), true};
      if (token.text == "w") {
        return {Expr::literal(GammaPolynomial(CyclotomicScalar::zeta_power(lambda_, 1)), "w"), true};
      }
      if (token.text.size() > 1 && token.text[0] == 'g' &&
          token.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        const long r = std::stol(token.text.substr(1));
        if (r < 1 || r > lambda_ - 1) {
          throw ParseError("'" + token.text + "' is outside g1..g" + std::to_string(lambda_ - 1), token.position);
        }
        return {Expr::literal(GammaPolynomial::symbol(static_cast<int>(r)), token.text), false};
      }
      throw ParseError("unknown identifier '" + token.text + "'", token.position);
    }
    if (at_symbol('(')) {
      advance();
      Expr inner = expression();
      expect(')');
      return {inner, false};
    }
    if (at_symbol('[')) {
      advance();
      Expr lhs = expression();
      expect(',');
      Expr rhs = expression();
      expect(']');
      return {Expr::commutator(lhs, rhs), false};
    }
    const std::string found = token.kind == TokenKind::end ? "end of input" : "'" + token.text + "'";
    throw ParseError("expected an operand but found " + found, token.position);
  }

  Lexer lexer_;
  Token current_{TokenKind::end, "", 0};
  int lambda_;
};

}  // namespace

Expr parse(std::string_view text, int lambda) {
  if (lambda < 2) {
    throw ParseError("lambda must be >= 2", 0);
  }
  return Parser(text, lambda).parse_all();
}

}  // namespace cxosc::symbolic
