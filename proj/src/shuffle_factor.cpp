#include "fliess/shuffle_factor.hpp"

#include "fliess/errors.hpp"
#include "fliess/lyndon_iso.hpp"

namespace fliess {

ShuffleFactorization factor_shuffle(const Series& c, const FactorBackend& backend) {
  if (c.is_zero()) throw DomainError("cannot factor the zero series");
  if (!c.is_exact()) throw DomainError("shuffle factorization needs a polynomial, not a truncated series");
  if (c.max_letter() > 1) throw DomainError("shuffle factorization is implemented for the alphabet {x0, x1}");

  LyndonMap lyndon;
  const Factorization f = factor(lyndon.to_lyndon(c), backend);
  ShuffleFactorization out;
  out.unit = f.unit;
  for (const auto& [q, k] : f.factors) out.factors.push_back({lyndon.from_lyndon(q), k, q});
  if (expand(out) != c) throw Error("shuffle factorization failed its reconstruction check");
  return out;
}

Series expand(const ShuffleFactorization& f) {
  Series out = Series::constant(f.unit);
  for (const auto& factor : f.factors) out = shuffle(out, shuffle_power(factor.series, factor.multiplicity));
  return out;
}

NullableAnalysis nullable_analysis(const Series& c, std::size_t n, const FactorBackend& backend) {
  if (!is_proper(c)) throw DomainError("nullable analysis needs a proper series");
  ShuffleFactorization sf = factor_shuffle(c, backend);
  NullableAnalysis out;
  out.unit = sf.unit;
  for (auto& factor : sf.factors) {
    NullabilityReport report = classify(factor.series, n);
    if (report.nulling_series) {
      const std::size_t r = report.relative_degree && report.relative_degree->r ? *report.relative_degree->r : 0;
      const Series residual = verify_null(c, *report.nulling_series, n + r);
      report.residual_order = residual.is_zero() && residual.is_exact()
                                  ? std::nullopt
                                  : std::optional<std::size_t>(order_lower_bound(residual));
    }
    out.factors.push_back({std::move(factor), std::move(report)});
  }
  return out;
}

}  // namespace fliess
