#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "fliess/composition.hpp"
#include "fliess/series.hpp"

namespace fliess {

enum class UndefinedReason {
  NoLinearWord,     // no word x0^k x1 occurs at all
  PrefixViolation,  // linear words occur, but not x0^(r-1) x1 for the common prefix length r-1
  ZeroForcedPart,   // every word is a power of x0
};

// Relative degree r and K = (c, x0^(r-1) x1), when defined.
struct RelativeDegree {
  std::optional<std::size_t> r;
  Rational K;
  UndefinedReason reason = UndefinedReason::ZeroForcedPart;

  bool defined() const noexcept { return r.has_value(); }
};

enum class Verdict {
  NotProper,
  NullableByZeroInput,
  LinearlyNullable,
  NotNullable,
  Indeterminate,
};

std::string_view to_string(Verdict v);
std::string_view to_string(UndefinedReason r);

struct NullabilityReport {
  Verdict verdict = Verdict::Indeterminate;
  // Empty when the relative degree could not be evaluated (truncated input
  // without a visible forced word).
  std::optional<RelativeDegree> relative_degree;
  std::optional<Jet> nulling_series;
  // Order of c o nulling_series. Empty when that residual is exactly zero;
  // horizon + 1 when it vanishes through a finite horizon.
  std::optional<std::size_t> residual_order;
};

// r - 1 is the common x0-prefix length of the forced support. A truncated
// series with no forced word inside its horizon raises TruncationError.
RelativeDegree relative_degree(const Series& c);

// Nulling series and residuals are computed through length n.
NullabilityReport classify(const Series& c, std::size_t n = 10);

// Unique jet with c o jet = 0 through length n + r, for linearly nullable c,
// by the fixed point c_u = -(e o c_u) with
// e = (x0^r)^{-1}(c) / (x0^(r-1) x1)^{-1}(c).
// Throws ClassificationError for any other input.
Jet nulling_series(const Series& c, std::size_t n);
// Same iteration from an arbitrary starting jet (n + 1 rounds).
Jet nulling_series_from(const Series& c, std::size_t n, const Jet& start);

// c composed with the stored polynomial of cu, through length n.
Series verify_null(const Series& c, const Jet& cu, std::size_t n);

}  // namespace fliess
