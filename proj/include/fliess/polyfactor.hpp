#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fliess/commutative.hpp"

namespace fliess {

// unit * prod(factor^multiplicity) equals the input exactly. Factors are
// irreducible over Q, content-free with integer coefficients, have positive
// graded-lex leading coefficient and are sorted by canonical_less.
struct Factorization {
  Rational unit;
  std::vector<std::pair<CommutativePolynomial, unsigned>> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Supported envelope of the built-in engine.
inline constexpr std::size_t kFactorMaxVariables = 6;
inline constexpr unsigned kFactorMaxTotalDegree = 8;

class FactorBackend {
 public:
  virtual ~FactorBackend() = default;
  virtual std::string_view name() const = 0;
  virtual Factorization factor(const CommutativePolynomial& p) const = 0;
};

// Kronecker substitution, Zassenhaus over Z, recombination by exact division.
// Fast on sparse inputs; raises CapacityError when the univariate image is
// too large.
class KroneckerBackend final : public FactorBackend {
 public:
  std::string_view name() const override { return "kronecker-zassenhaus"; }
  Factorization factor(const CommutativePolynomial& p) const override;
};

// Generic linear change of variables making the input monic in one
// variable, univariate factorization at an evaluation point, multivariate
// Hensel lifting, recombination by exact division.
class LiftingBackend final : public FactorBackend {
 public:
  std::string_view name() const override { return "hensel-lifting"; }
  Factorization factor(const CommutativePolynomial& p) const override;
};

// Lifting first, Kronecker substitution when no evaluation point works.
class HybridBackend final : public FactorBackend {
 public:
  std::string_view name() const override { return "hybrid"; }
  Factorization factor(const CommutativePolynomial& p) const override;
};

// The hybrid backend.
const FactorBackend& default_factor_backend();

// Throws DomainError for p = 0 and CapacityError outside the envelope (or
// when recombination would blow up).
Factorization factor(const CommutativePolynomial& p, const FactorBackend& backend = default_factor_backend());
// Throws DomainError for constants.
bool is_irreducible(const CommutativePolynomial& p, const FactorBackend& backend = default_factor_backend());

// Exact quotient a / b over Q when b divides a.
std::optional<CommutativePolynomial> divide_exact(const CommutativePolynomial& a, const CommutativePolynomial& b);

// Product of the factors with their multiplicities, times the unit.
CommutativePolynomial expand(const Factorization& f, VariableFamily family = VariableFamily::Lyndon);

}  // namespace fliess
