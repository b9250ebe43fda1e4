#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/word.hpp"

namespace fliess {

// Longest word length whose coefficient is known. std::nullopt means the
// series is an exact polynomial.
using Horizon = std::optional<std::size_t>;

inline Horizon min_horizon(Horizon a, Horizon b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Order of a series; kInfiniteOrder stands for the order of the zero series.
inline constexpr std::size_t kInfiniteOrder = std::numeric_limits<std::size_t>::max();

// Sparse noncommutative polynomial, or a power series known only through a
// horizon. No stored coefficient is zero and no stored word is longer than
// the horizon.
class Series {
 public:
  using Terms = std::map<Word, Rational, GradedLess>;

  Series() = default;
  explicit Series(Terms terms, Horizon horizon = std::nullopt);

  static Series constant(const Rational& value);
  static Series monomial(const Word& w, const Rational& coeff = 1);
  static Series one() { return constant(1); }

  const Terms& terms() const noexcept { return terms_; }
  Horizon horizon() const noexcept { return horizon_; }
  bool is_exact() const noexcept { return !horizon_.has_value(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Throws TruncationError for words longer than the horizon.
  Rational coefficient(const Word& w) const;
  // Constant term (c, 1).
  Rational constant_term() const;
  // Length of the longest stored word; 0 for the zero series.
  std::size_t degree() const;
  int max_letter() const;

  // Same terms, horizon dropped: the stored polynomial taken at face value.
  Series as_polynomial() const { return Series(terms_); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  Terms terms_;
  Horizon horizon_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Rational& alpha, const Series& c);

Series add(const Series& a, const Series& b);
Series scalar_mul(const Rational& alpha, const Series& c);
Series concat(const Series& a, const Series& b);
Series shuffle(const Series& a, const Series& b);
// Shuffle product of two words, with integer multiplicities.
Series shuffle(const Word& a, const Word& b);
Series shuffle_power(const Series& c, unsigned k);

// prefix^{-1}(c): strips the prefix from every word that has it, drops the rest.
Series left_shift(const Word& prefix, const Series& c);

// c_N: the words in x0 only; c_F = c - c_N.
Series natural_part(const Series& c);
Series forced_part(const Series& c);

std::size_t order(const Series& c);
bool is_proper(const Series& c);
Series truncate(const Series& c, std::size_t n);

// Coefficients agree for every word of length <= n. Both series must know
// their coefficients through n.
bool equal_through(const Series& a, const Series& b, std::size_t n);

// Lower bound on the order of the unknown-inclusive series: the order of the
// stored part if nonzero, otherwise horizon + 1 (or infinity when exact).
std::size_t order_lower_bound(const Series& c);

// Horizon a bilinear product of a and b can certify; nullopt when both exact.
Horizon product_horizon(const Series& a, const Series& b);

}  // namespace fliess
