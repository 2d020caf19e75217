#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cxosc/gamma_polynomial.hpp"
#include "cxosc/params.hpp"
#include "cxosc/report.hpp"
#include "cxosc/symbolic/expr.hpp"

namespace cxosc::symbolic {

/// Normal-ordered word (a†)^p a^q K^s, 0 ≤ s < λ.
struct WordKey {
  long p = 0;
  long q = 0;
  long s = 0;
  auto operator<=>(const WordKey&) const = default;
};

/// "ad^2 a K", "I" for the empty word.
std::string to_string(const WordKey& key);

/// Exact linear combination of normal-ordered words. Canonical: no zero
/// coefficients, K exponents reduced mod λ, so equality is map equality.
class NormalForm {
 public:
  using Terms = std::map<WordKey, GammaPolynomial>;

  explicit NormalForm(int lambda) : lambda_(lambda) {}
  static NormalForm word(int lambda, WordKey key, const GammaPolynomial& coeff = GammaPolynomial(1));

  int lambda() const { return lambda_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GammaPolynomial coefficient(WordKey key) const;

  void add(WordKey key, const GammaPolynomial& coeff);

  NormalForm& operator+=(const NormalForm& rhs);
  NormalForm& operator-=(const NormalForm& rhs);
  NormalForm& operator*=(const GammaPolynomial& factor);
  friend NormalForm operator+(NormalForm lhs, const NormalForm& rhs) { return lhs += rhs; }
  friend NormalForm operator-(NormalForm lhs, const NormalForm& rhs) { return lhs -= rhs; }
  friend bool operator==(const NormalForm& lhs, const NormalForm& rhs) {
    return lhs.lambda_ == rhs.lambda_ && lhs.terms_ == rhs.terms_;
  }

  /// One word per line: "<coefficient> · <word>".
  std::vector<std::string> lines() const;

 private:
  int lambda_;
  Terms terms_;
};

/// Rewrites products of normal forms back to normal form using
///   a·a† → a†·a + I + Σ_r γ_r K^r,   K·a† → ζ²·a†·K,   K·a → ζ⁻²·a·K,   K^λ → I.
///
/// Strategy: a product X·Y is built by left-multiplying the normal form Y by
/// the letters of each word of X, innermost (rightmost) first. Only a and K
/// need rewriting when they land on a normal word. K passes every letter
/// with a phase and stops at the K block, so it terminates immediately. For
/// a·(a†)^p a^q K^s each swap with one a† leaves a word with one fewer a†
/// to the right of the moving a plus correction terms of strictly lower
/// a†-degree; induction on p terminates. The results of a·word are memoized
/// per word.
class Rewriter {
 public:
  explicit Rewriter(int lambda);

  int lambda() const { return lambda_; }

  NormalForm left_multiply(Generator generator, const NormalForm& y);
  NormalForm multiply(const NormalForm& x, const NormalForm& y);
  NormalForm normal_order(const Expr& expr);

 private:
  const NormalForm& annihilator_times(WordKey key);
  NormalForm cyclic_times(const NormalForm& y) const;

  int lambda_;
  std::map<WordKey, NormalForm> memo_;
};

NormalForm normal_order(const Expr& expr, int lambda);

Json to_json(const NormalForm& form);

enum class Semantics { fock, bilateral };

/// Action of a normal form on |n⟩ with a†|k⟩ = |k+1⟩, a|k⟩ = F(k)|k−1⟩,
/// K|k⟩ = e^{2πik/λ}|k⟩ and the numeric γ of params. Under Fock semantics
/// states below 0 are annihilated. Entries are sorted by target state.
std::vector<std::pair<long, Complex>> evaluate_on_state(const NormalForm& form, long n,
                                                       const AlgebraParams& params,
                                                       Semantics semantics = Semantics::fock);

}  // namespace cxosc::symbolic
