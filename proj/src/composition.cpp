#include "fliess/composition.hpp"

#include <algorithm>
#include <unordered_map>

#include "fliess/errors.hpp"
#include "fliess/kernels.hpp"

namespace fliess {

namespace {

void require_single_input(const Series& s, const char* role) {
  if (s.max_letter() > 1) {
    throw DomainError(std::string("composition is defined for the alphabet {x0, x1}; the ") + role +
                      " uses a larger letter");
  }
}

// Longest word of c o d when both are polynomials: each x1 in a word of c
// is replaced by a shuffle with d, adding at most deg(d) letters.
std::size_t exact_output_degree(const Series& c, const Series& d) {
  std::size_t longest = 0;
  for (const auto& [w, v] : c.terms()) {
    longest = std::max(longest, w.size() + w.count(1) * d.degree());
  }
  return longest;
}

struct OutputPlan {
  std::size_t limit;
  Horizon horizon;
};

OutputPlan plan_output(const Series& c, const Series& d, std::size_t n) {
  std::size_t limit = n;
  if (c.horizon()) limit = std::min(limit, *c.horizon());
  if (d.horizon()) {
    // Unknown words of d are longer than its horizon; they reach the output
    // only through a word of c containing x1.
    const std::size_t shortest_forced = order_lower_bound(forced_part(c));
    if (shortest_forced != kInfiniteOrder) limit = std::min(limit, *d.horizon() + shortest_forced);
  }
  if (c.is_exact() && d.is_exact() && exact_output_degree(c, d) <= n) return {n, std::nullopt};
  return {limit, limit};
}

// Value for eta from the longest cached proper suffix, caching every
// intermediate suffix on the way. The empty word must already be cached.
template <class Value, class Step>
const Value& memoized_suffixes(std::unordered_map<Word, Value, WordHash>& memo, const Word& eta, Step&& step) {
  if (auto it = memo.find(eta); it != memo.end()) return it->second;
  std::size_t cached = 1;
  while (!memo.contains(eta.slice(cached))) ++cached;
  for (std::size_t pos = cached; pos-- > 0;) {
    Value value = step(eta[pos], memo.at(eta.slice(pos + 1)));
    memo.emplace(eta.slice(pos), std::move(value));
  }
  return memo.at(eta);
}

Series::Terms prefix_x0(const Series::Terms& t) {
  Series::Terms out;
  for (const auto& [w, v] : t) out.emplace_hint(out.end(), Word::letter(0) + w, v);
  return out;
}

Series compose_general(const Series& c, const Series& d, const OutputPlan& plan) {
  const std::size_t limit = plan.limit;
  std::unordered_map<Word, Series::Terms, WordHash> memo;
  memo.emplace(Word{}, Series::Terms{{Word{}, Rational(1)}});

  // psi_d(x_i xi)(1) = x0 (d_i shuffled with psi_d(xi)(1)), with d_0 = 1;
  // values are memoized per suffix and built from the right.
  auto step = [&](Letter x, const Series::Terms& inner) {
    Series::Terms value;
    if (limit == 0) return value;
    if (x == 0) {
      for (const auto& [w, v] : inner) {
        if (w.size() + 1 > limit) break;
        value.emplace_hint(value.end(), Word::letter(0) + w, v);
      }
      return value;
    }
    return prefix_x0(kernels::shuffle_terms_serial(d.terms(), inner, limit - 1));
  };
  auto psi = [&](const Word& eta) -> const Series::Terms& { return memoized_suffixes(memo, eta, step); };

  Series::Terms out;
  for (const auto& [eta, coeff] : c.terms()) {
    if (eta.size() > limit) break;
    for (const auto& [w, v] : psi(eta)) out[w] += coeff * v;
  }
  return Series(std::move(out), plan.horizon);
}

// d is a jet: every intermediate value is a jet too, so values are dense
// coefficient vectors and x0^a shuffled with x0^b is C(a+b, a) x0^(a+b).
Series compose_with_jet(const Series& c, const Series& d, const OutputPlan& plan) {
  const std::size_t limit = plan.limit;
  using Dense = std::vector<Rational>;
  Dense dj(limit + 1);
  for (const auto& [w, v] : d.terms()) {
    if (w.size() <= limit) dj[w.size()] = v;
  }
  std::vector<std::vector<Integer>> binom(limit + 1);
  for (std::size_t k = 0; k <= limit; ++k) {
    binom[k].resize(k + 1);
    for (std::size_t a = 0; a <= k; ++a) binom[k][a] = binomial(static_cast<unsigned>(k), static_cast<unsigned>(a));
  }

  std::unordered_map<Word, Dense, WordHash> memo;
  Dense unit(limit + 1);
  unit[0] = 1;
  memo.emplace(Word{}, std::move(unit));

  auto step = [&](Letter x, const Dense& inner) {
    Dense value(limit + 1);
    if (x == 0) {
      for (std::size_t k = 0; k < limit; ++k) value[k + 1] = inner[k];
      return value;
    }
    for (std::size_t k = 0; k < limit; ++k) {
      Rational sum = 0;
      for (std::size_t a = 0; a <= k; ++a) {
        if (dj[a] == 0 || inner[k - a] == 0) continue;
        sum += Rational(binom[k][a]) * dj[a] * inner[k - a];
      }
      value[k + 1] = sum;
    }
    return value;
  };

  auto psi = [&](const Word& eta) -> const Dense& { return memoized_suffixes(memo, eta, step); };

  Dense out(limit + 1);
  for (const auto& [eta, coeff] : c.terms()) {
    if (eta.size() > limit) break;
    const Dense& v = psi(eta);
    for (std::size_t k = eta.size(); k <= limit; ++k) {
      if (v[k] != 0) out[k] += coeff * v[k];
    }
  }
  Series::Terms t;
  for (std::size_t k = 0; k <= limit; ++k) {
    if (out[k] != 0) t.emplace(Word::power(0, k), out[k]);
  }
  return Series(std::move(t), plan.horizon);
}

}  // namespace

bool is_jet(const Series& s) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const auto& kv) { return kv.first.leading_run(0) == kv.first.size(); });
}

Jet::Jet(Series s) : series_(std::move(s)) {
  if (!is_jet(series_)) throw DomainError("a jet must be supported on powers of x0");
}

Jet Jet::from_coefficients(const std::vector<Rational>& coeffs, Horizon horizon) {
  Series::Terms t;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) t.emplace(Word::power(0, k), coeffs[k]);
  }
  return Jet(Series(std::move(t), horizon));
}

Series compose(const Series& c, const Series& d, std::size_t n) {
  require_single_input(c, "left argument");
  require_single_input(d, "right argument");
  const OutputPlan plan = plan_output(c, d, n);
  return is_jet(d) ? compose_with_jet(c, d, plan) : compose_general(c, d, plan);
}

Series compose(const Series& c, const Jet& d, std::size_t n) { return compose(c, d.series(), n); }

Series shuffle_inverse(const Series& d, std::size_t n) {
  const Rational d0 = d.constant_term();
  if (d0 == 0) throw NotInvertibleError("a proper series has no shuffle inverse");
  // d = d0 (1 - d'), with d' proper; the geometric series in d' stabilizes
  // through length n after n terms.
  const Series dprime = Series::one() - scalar_mul(1 / d0, d);
  if (dprime.is_zero() && d.is_exact()) return Series::constant(1 / d0);
  const std::size_t limit = d.horizon() ? std::min(n, *d.horizon()) : n;
  Series power = truncate(Series::one(), limit);
  Series sum = power;
  for (std::size_t k = 1; k <= limit; ++k) {
    power = truncate(shuffle(power, truncate(dprime, limit)), limit);
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return scalar_mul(1 / d0, truncate(sum, limit));
}

Series shuffle_quotient(const Series& c, const Series& d, std::size_t n) {
  return truncate(shuffle(truncate(c, n), shuffle_inverse(d, n)), n);
}

}  // namespace fliess
