#pragma once
// Seeded random instances for the property suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fliess/commutative.hpp"
#include "fliess/composition.hpp"
#include "fliess/realization.hpp"
#include "fliess/series.hpp"

namespace gen {

using fliess::CommutativePolynomial;
using fliess::Jet;
using fliess::Rational;
using fliess::Series;
using fliess::Word;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  // Nonzero integer in [-bound, bound].
  long nonzero(long bound);
  // p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(long bound);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Word word(Rng& rng, std::size_t min_len, std::size_t max_len);

// Up to max_terms words of length in [min_len, max_len], coefficients in [-5, 5].
Series polynomial(Rng& rng, std::size_t max_terms, std::size_t min_len, std::size_t max_len);
Series nonzero_polynomial(Rng& rng, std::size_t max_terms, std::size_t min_len, std::size_t max_len);

// Exact jet of degree <= degree with integer coefficients in [-3, 3].
Jet jet(Rng& rng, std::size_t degree);

// A series with relative degree r: natural part inside x0^r X0*, forced
// part inside x0^(r-1) X*, (c, x0^(r-1) x1) != 0. With natural_low set, the
// natural part may also reach below x0^r (so it is generally not nullable).
struct WithRelativeDegree {
  Series c;
  std::size_t r;
};
WithRelativeDegree with_relative_degree(Rng& rng, std::size_t max_r, bool natural_low);

// Linearly nullable series: with_relative_degree without low natural terms.
WithRelativeDegree linearly_nullable(Rng& rng, std::size_t max_r);

// Irreducible over Q by construction: a nonconstant linear form, or
// v^2 + p v + q with p constant and q a nonconstant linear form in the
// other variables (needs two variables).
CommutativePolynomial irreducible(Rng& rng, const std::vector<fliess::Variable>& vars, unsigned max_degree);

// Realization dz = A z + a + (B z + b) u, y = h z + h0 with small integers.
fliess::Realization affine_system(Rng& rng, std::size_t n, bool zero_state);

fliess::TimePolynomial time_polynomial(Rng& rng, std::size_t degree);

}  // namespace gen
