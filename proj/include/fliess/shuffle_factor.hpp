#pragma once

#include <cstddef>
#include <vector>

#include "fliess/commutative.hpp"
#include "fliess/nullability.hpp"
#include "fliess/polyfactor.hpp"
#include "fliess/series.hpp"

namespace fliess {

struct ShuffleFactor {
  Series series;
  unsigned multiplicity = 1;
  // Image under the Lyndon map: a content-free integer polynomial.
  CommutativePolynomial lyndon;
};

// unit times the shuffle product of the factors (with multiplicity) is the input.
struct ShuffleFactorization {
  Rational unit;
  std::vector<ShuffleFactor> factors;
};

// Throws DomainError for zero or truncated input, CapacityError from polyfactor.
ShuffleFactorization factor_shuffle(const Series& c, const FactorBackend& backend = default_factor_backend());

// Shuffle product of the factors, times the unit.
Series expand(const ShuffleFactorization& f);

struct FactorAnalysis {
  ShuffleFactor factor;
  // Verdict of the factor alone. When a nulling series is attached,
  // residual_order refers to the full input composed with it, through
  // length n + r.
  NullabilityReport report;
};

struct NullableAnalysis {
  Rational unit;
  std::vector<FactorAnalysis> factors;
};

// Factor, then classify each irreducible factor. Requires a nonzero proper polynomial.
NullableAnalysis nullable_analysis(const Series& c, std::size_t n = 10,
                                   const FactorBackend& backend = default_factor_backend());

}  // namespace fliess
