#pragma once

#include <cstddef>
#include <vector>

#include "fliess/series.hpp"

namespace fliess {

// A series supported on powers of x0, standing for the formal input or
// output function u(t) = sum_k (c_u, x0^k) t^k / k!.
class Jet {
 public:
  Jet() = default;
  // Throws DomainError unless every word of s is a power of x0.
  explicit Jet(Series s);
  static Jet constant(const Rational& value) { return Jet(Series::constant(value)); }
  // Coefficients of x0^0, x0^1, ... as an exact polynomial jet.
  static Jet from_coefficients(const std::vector<Rational>& coeffs, Horizon horizon = std::nullopt);

  const Series& series() const noexcept { return series_; }
  Horizon horizon() const noexcept { return series_.horizon(); }
  // (c_u, x0^k).
  Rational coefficient(std::size_t k) const { return series_.coefficient(Word::power(0, k)); }

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  Series series_;
};

bool is_jet(const Series& s);

// c o d for the single-input alphabet {x0, x1}, with d substituted for x1.
// Coefficients are exact through length n (or through the shorter length
// the horizons of c and d can support). When c and d are polynomials whose
// composition has no word longer than n the result is exact.
Series compose(const Series& c, const Series& d, std::size_t n);
Series compose(const Series& c, const Jet& d, std::size_t n);

// d^{-1} under the shuffle product through length n. Throws
// NotInvertibleError when d is proper.
Series shuffle_inverse(const Series& d, std::size_t n);

// c / d = c shuffled with the shuffle inverse of d, through length n.
Series shuffle_quotient(const Series& c, const Series& d, std::size_t n);

}  // namespace fliess
