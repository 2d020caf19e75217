#include "cxosc/symbolic/normal_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cxosc::symbolic {

std::string to_string(const WordKey& key) {
  std::string out;
  auto append = [&out](const char* letter, long power) {
    if (power == 0) {
      return;
    }
    if (!out.empty()) {
      out += " ";
    }
    out += letter;
    if (power != 1) {
      out += "^" + std::to_string(power);
    }
  };
  append("ad", key.p);
  append("a", key.q);
  append("K", key.s);
  return out.empty() ? "I" : out;
}

NormalForm NormalForm::word(int lambda, WordKey key, const GammaPolynomial& coeff) {
  NormalForm out(lambda);
  out.add(key, coeff);
  return out;
}

GammaPolynomial NormalForm::coefficient(WordKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GammaPolynomial{} : it->second;
}

void NormalForm::add(WordKey key, const GammaPolynomial& coeff) {
  if (key.p < 0 || key.q < 0) {
    throw std::invalid_argument("NormalForm: negative power of a or ad");
  }
  key.s %= lambda_;
  if (key.s < 0) {
    key.s += lambda_;
  }
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) {
    add(key, coeff);
  }
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) {
    add(key, -coeff);
  }
  return *this;
}

NormalForm& NormalForm::operator*=(const GammaPolynomial& factor) {
  Terms scaled;
  for (const auto& [key, coeff] : terms_) {
    GammaPolynomial product = factor * coeff;
    if (!product.is_zero()) {
      scaled.emplace(key, std::move(product));
    }
  }
  terms_ = std::move(scaled);
  return *this;
}

std::vector<std::string> NormalForm::lines() const {
  std::vector<std::string> out;
  for (const auto& [key, coeff] : terms_) {
    out.push_back(coeff.to_string() + " · " + to_string(key));
  }
  return out;
}

Rewriter::Rewriter(int lambda) : lambda_(lambda) {
  if (lambda < 2) {
    throw std::invalid_argument("Rewriter: lambda must be >= 2");
  }
}

NormalForm Rewriter::cyclic_times(const NormalForm& y) const {
  // K·(a†)^p a^q K^s = ζ^{2(p−q)} (a†)^p a^q K^{s+1}
  NormalForm out(lambda_);
  for (const auto& [key, coeff] : y.terms()) {
    const GammaPolynomial phase = CyclotomicScalar::zeta_power(lambda_, 2 * (key.p - key.q));
    out.add({key.p, key.q, key.s + 1}, phase * coeff);
  }
  return out;
}

const NormalForm& Rewriter::annihilator_times(WordKey key) {
  if (auto it = memo_.find(key); it != memo_.end()) {
    return it->second;
  }
  NormalForm result(lambda_);
  if (key.p == 0) {
    result.add({0, key.q + 1, key.s}, GammaPolynomial(1));
  } else {
    // a·a†·W = a†·(a·W) + W + Σ_r γ_r K^r·W  with  W = (a†)^{p−1} a^q K^s
    const WordKey rest{key.p - 1, key.q, key.s};
    const NormalForm inner = annihilator_times(rest);
    for (const auto& [k, c] : inner.terms()) {
      result.add({k.p + 1, k.q, k.s}, c);
    }
    result.add(rest, GammaPolynomial(1));
    for (int r = 1; r < lambda_; ++r) {
      NormalForm shifted = NormalForm::word(lambda_, rest);
      for (int i = 0; i < r; ++i) {
        shifted = cyclic_times(shifted);
      }
      shifted *= GammaPolynomial::symbol(r);
      result += shifted;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

NormalForm Rewriter::left_multiply(Generator generator, const NormalForm& y) {
  NormalForm out(lambda_);
  switch (generator) {
    case Generator::I:
      return y;
    case Generator::ad:
      for (const auto& [key, coeff] : y.terms()) {
        out.add({key.p + 1, key.q, key.s}, coeff);
      }
      return out;
    case Generator::K:
      return cyclic_times(y);
    case Generator::a:
      for (const auto& [key, coeff] : y.terms()) {
        NormalForm term = annihilator_times(key);
        term *= coeff;
        out += term;
      }
      return out;
  }
  return out;
}

NormalForm Rewriter::multiply(const NormalForm& x, const NormalForm& y) {
  NormalForm out(lambda_);
  for (const auto& [key, coeff] : x.terms()) {
    NormalForm acc = y;
    for (long i = 0; i < key.s; ++i) {
      acc = left_multiply(Generator::K, acc);
    }
    for (long i = 0; i < key.q; ++i) {
      acc = left_multiply(Generator::a, acc);
    }
    for (long i = 0; i < key.p; ++i) {
      acc = left_multiply(Generator::ad, acc);
    }
    acc *= coeff;
    out += acc;
  }
  return out;
}

namespace {

/// Inverse of c·K^s with c = r·ζ^k a single-term constant.
NormalForm invert_unit(const NormalForm& form) {
  const int lambda = form.lambda();
  if (form.terms().size() != 1) {
    throw std::domain_error("negative power of a non-invertible operator");
  }
  const auto& [key, coeff] = *form.terms().begin();
  const CyclotomicScalar c = coeff.constant_term();
  if (key.p != 0 || key.q != 0 || !(GammaPolynomial(c) == coeff)) {
    throw std::domain_error("negative power of a non-invertible operator");
  }
  int nonzero = -1;
  for (int k = 0; k < std::max(1, c.lambda()); ++k) {
    if (c.coefficient(k) != 0) {
      if (nonzero >= 0) {
        throw std::domain_error("negative power of a non-invertible scalar");
      }
      nonzero = k;
    }
  }
  const Rational magnitude = c.coefficient(nonzero);
  CyclotomicScalar inverse = CyclotomicScalar(Rational(1) / magnitude) *
                             CyclotomicScalar::zeta_power(lambda, -static_cast<long>(nonzero));
  return NormalForm::word(lambda, {0, 0, -key.s}, GammaPolynomial(inverse));
}

}  // namespace

NormalForm Rewriter::normal_order(const Expr& expr) {
  const auto& node = expr.node().value;
  if (const auto* atom = std::get_if<AtomNode>(&node)) {
    switch (atom->generator) {
      case Generator::a:
        return NormalForm::word(lambda_, {0, 1, 0});
      case Generator::ad:
        return NormalForm::word(lambda_, {1, 0, 0});
      case Generator::K:
        return NormalForm::word(lambda_, {0, 0, 1});
      case Generator::I:
        return NormalForm::word(lambda_, {0, 0, 0});
    }
  }
  if (const auto* literal = std::get_if<LiteralNode>(&node)) {
    return NormalForm::word(lambda_, {0, 0, 0}, literal->value);
  }
  if (const auto* sum = std::get_if<SumNode>(&node)) {
    NormalForm out(lambda_);
    for (const auto& [sign, term] : sum->terms) {
      if (sign < 0) {
        out -= normal_order(term);
      } else {
        out += normal_order(term);
      }
    }
    return out;
  }
  if (const auto* product = std::get_if<ProductNode>(&node)) {
    NormalForm acc = NormalForm::word(lambda_, {0, 0, 0});
    for (auto it = product->factors.rbegin(); it != product->factors.rend(); ++it) {
      acc = multiply(normal_order(*it), acc);
    }
    return acc;
  }
  const auto& power = std::get<PowerNode>(node);
  NormalForm base = normal_order(power.base);
  if (power.exponent < 0) {
    base = invert_unit(base);
  }
  NormalForm acc = NormalForm::word(lambda_, {0, 0, 0});
  for (long i = 0; i < std::abs(power.exponent); ++i) {
    acc = multiply(base, acc);
  }
  return acc;
}

NormalForm normal_order(const Expr& expr, int lambda) {
  Rewriter rewriter(lambda);
  return rewriter.normal_order(expr);
}

Json to_json(const NormalForm& form) {
  Json words = Json::array();
  for (const auto& [key, coeff] : form.terms()) {
    Json terms = Json::array();
    for (const auto& [monomial, scalar] : coeff.terms()) {
      Json gamma = Json::object();
      for (const auto& [r, e] : monomial) {
        gamma["g" + std::to_string(r)] = e;
      }
      Json zeta = Json::object();
      for (int k = 0; k < std::max(1, scalar.lambda()); ++k) {
        if (scalar.coefficient(k) != 0) {
          zeta["w^" + std::to_string(k)] = cxosc::to_string(scalar.coefficient(k));
        }
      }
      terms.push_back({{"gamma", gamma}, {"zeta", zeta}});
    }
    words.push_back({{"p", key.p}, {"q", key.q}, {"s", key.s}, {"coeff", coeff.to_string()}, {"coeff_terms", terms}});
  }
  return {{"lambda", form.lambda()}, {"words", words}};
}

std::vector<std::pair<long, Complex>> evaluate_on_state(const NormalForm& form, long n,
                                                       const AlgebraParams& params, Semantics semantics) {
  if (semantics == Semantics::fock && n < 0) {
    throw std::invalid_argument("evaluate_on_state: Fock states have n >= 0");
  }
  if (params.lambda() != form.lambda()) {
    throw std::invalid_argument("evaluate_on_state: lambda mismatch");
  }
  std::map<long, Complex> accumulated;
  const int lambda = params.lambda();
  for (const auto& [key, coeff] : form.terms()) {
    if (semantics == Semantics::fock && key.q > n) {
      continue;
    }
    Complex value = coeff.evaluate(params.gamma());
    long phase_index = (n * key.s) % lambda;
    if (phase_index < 0) {
      phase_index += lambda;
    }
    value *= std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase_index) / lambda);
    long state = n;
    for (long i = 0; i < key.q; ++i) {
      value *= structure_function(params, state);
      --state;
    }
    state += key.p;
    accumulated[state] += value;
  }
  return {accumulated.begin(), accumulated.end()};
}

}  // namespace cxosc::symbolic
