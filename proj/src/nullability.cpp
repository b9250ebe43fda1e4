#include "fliess/nullability.hpp"

#include <algorithm>

#include "fliess/errors.hpp"

namespace fliess {

namespace {

Word linear_word(std::size_t prefix) { return Word::power(0, prefix) + Word::letter(1); }

bool natural_prefix_vanishes(const Series& c, std::size_t r) {
  for (std::size_t k = 0; k < r; ++k) {
    if (c.coefficient(Word::power(0, k)) != 0) return false;
  }
  return true;
}

std::optional<std::size_t> residual_order_of(const Series& residual) {
  if (residual.is_zero() && residual.is_exact()) return std::nullopt;
  return order_lower_bound(residual);
}

std::size_t linear_nullability_degree(const Series& c) {
  if (c.max_letter() > 1) throw DomainError("nullability is defined for the alphabet {x0, x1}");
  if (!is_proper(c)) throw ClassificationError("series is not proper, so it is not nullable");
  if (natural_part(c).is_zero()) {
    throw ClassificationError("natural part is zero; the zero input already nulls the series");
  }
  const RelativeDegree rd = relative_degree(c);
  if (!rd.defined()) throw ClassificationError("relative degree is not defined");
  if (!natural_prefix_vanishes(c, *rd.r)) {
    throw ClassificationError("natural part has a word shorter than the relative degree; not nullable");
  }
  return *rd.r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotProper: return "NotProper";
    case Verdict::NullableByZeroInput: return "NullableByZeroInput";
    case Verdict::LinearlyNullable: return "LinearlyNullable";
    case Verdict::NotNullable: return "NotNullable";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string_view to_string(UndefinedReason r) {
  switch (r) {
    case UndefinedReason::NoLinearWord: return "no linear word";
    case UndefinedReason::PrefixViolation: return "prefix violation";
    case UndefinedReason::ZeroForcedPart: return "zero forced part";
  }
  return "?";
}

RelativeDegree relative_degree(const Series& c) {
  const Series forced = forced_part(c);
  if (forced.is_zero()) {
    if (!c.is_exact()) {
      throw TruncationError("no forced word within the horizon; relative degree cannot be decided");
    }
    return RelativeDegree{std::nullopt, 0, UndefinedReason::ZeroForcedPart};
  }
  std::size_t prefix = kInfiniteOrder;
  for (const auto& [w, v] : forced.terms()) prefix = std::min(prefix, w.leading_run(0));

  const Rational K = c.coefficient(linear_word(prefix));
  if (K != 0) return RelativeDegree{prefix + 1, K, UndefinedReason::ZeroForcedPart};

  const bool any_linear = std::any_of(forced.terms().begin(), forced.terms().end(), [](const auto& kv) {
    const Word& w = kv.first;
    return w.back() == 1 && w.leading_run(0) + 1 == w.size();
  });
  return RelativeDegree{std::nullopt, 0,
                        any_linear ? UndefinedReason::PrefixViolation : UndefinedReason::NoLinearWord};
}

NullabilityReport classify(const Series& c, std::size_t n) {
  if (c.max_letter() > 1) throw DomainError("nullability is defined for the alphabet {x0, x1}");
  NullabilityReport report;
  try {
    report.relative_degree = relative_degree(c);
  } catch (const TruncationError&) {
    report.relative_degree.reset();
  }

  if (!is_proper(c)) {
    report.verdict = Verdict::NotProper;
    return report;
  }
  if (natural_part(c).is_zero()) {
    report.verdict = Verdict::NullableByZeroInput;
    report.nulling_series = Jet{};
    report.residual_order = residual_order_of(verify_null(c, Jet{}, n));
    return report;
  }
  if (!report.relative_degree) {
    throw TruncationError("no forced word within the horizon; relative degree cannot be decided");
  }
  const RelativeDegree& rd = *report.relative_degree;
  if (!rd.defined()) {
    report.verdict = Verdict::Indeterminate;
    return report;
  }
  if (!natural_prefix_vanishes(c, *rd.r)) {
    report.verdict = Verdict::NotNullable;
    return report;
  }
  report.verdict = Verdict::LinearlyNullable;
  report.nulling_series = nulling_series(c, n);
  report.residual_order = residual_order_of(verify_null(c, *report.nulling_series, n + *rd.r));
  return report;
}

Jet nulling_series(const Series& c, std::size_t n) { return nulling_series_from(c, n, Jet{}); }

Jet nulling_series_from(const Series& c, std::size_t n, const Jet& start) {
  const std::size_t r = linear_nullability_degree(c);
  const Series numerator = left_shift(Word::power(0, r), c);
  const Series denominator = left_shift(linear_word(r - 1), c);
  const Series e = shuffle_quotient(numerator, denominator, n);

  // Each round fixes one more coefficient of the jet.
  Series cu = truncate(start.series(), n);
  for (std::size_t round = 0; round <= n; ++round) {
    cu = -compose(e, cu, n);
  }
  return Jet(truncate(cu, n));
}

Series verify_null(const Series& c, const Jet& cu, std::size_t n) {
  return compose(c, cu.series().as_polynomial(), n);
}

}  // namespace fliess
