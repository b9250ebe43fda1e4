#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fliess/rational.hpp"

namespace fliess {

// Which indexed family the variables belong to: Lyndon variables l_i, or
// state variables z_j of a realization. Only affects rendering and mixing checks.
enum class VariableFamily : char { Lyndon = 'l', State = 'z' };

using Variable = std::uint32_t;

// Product of variables with positive exponents, stored sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  // Exponents may repeat variables or be zero; they are merged.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(Variable v, std::uint32_t exponent = 1) { return Monomial({{v, exponent}}); }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree(Variable v) const;
  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lex: total degree first; then the larger exponent of the
// lowest-indexed differing variable is larger.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex(a, b) < 0; }
};

// Sparse multivariate polynomial over the rationals; no zero coefficients.
class CommutativePolynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  explicit CommutativePolynomial(VariableFamily family = VariableFamily::Lyndon) : family_(family) {}
  CommutativePolynomial(Terms terms, VariableFamily family);

  static CommutativePolynomial constant(const Rational& value, VariableFamily family = VariableFamily::Lyndon);
  static CommutativePolynomial variable(Variable v, VariableFamily family = VariableFamily::Lyndon);
  static CommutativePolynomial monomial(const Monomial& m, const Rational& coeff,
                                        VariableFamily family = VariableFamily::Lyndon);

  VariableFamily family() const noexcept { return family_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Largest monomial under graded_lex with its coefficient. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.rbegin(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree(Variable v) const;
  // Sorted list of variables that occur.
  std::vector<Variable> variables() const;

  CommutativePolynomial derivative(Variable v) const;
  // Unlisted variables evaluate to zero.
  Rational evaluate(const std::map<Variable, Rational>& point) const;

  CommutativePolynomial& operator+=(const CommutativePolynomial& other);
  CommutativePolynomial& operator-=(const CommutativePolynomial& other);

  friend CommutativePolynomial operator+(CommutativePolynomial a, const CommutativePolynomial& b) { return a += b; }
  friend CommutativePolynomial operator-(CommutativePolynomial a, const CommutativePolynomial& b) { return a -= b; }
  friend CommutativePolynomial operator-(const CommutativePolynomial& a);
  friend CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b);
  friend CommutativePolynomial operator*(const Rational& alpha, const CommutativePolynomial& a);
  friend bool operator==(const CommutativePolynomial& a, const CommutativePolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  VariableFamily family_;
  Terms terms_;
};

CommutativePolynomial pow(const CommutativePolynomial& p, unsigned k);

// Canonical total order: compares term sequences from the leading term down.
bool canonical_less(const CommutativePolynomial& a, const CommutativePolynomial& b);

}  // namespace fliess
