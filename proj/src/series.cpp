#include "fliess/series.hpp"

#include <algorithm>

#include "fliess/errors.hpp"
#include "fliess/kernels.hpp"

namespace fliess {

namespace {

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return (a > kInfiniteOrder - b) ? kInfiniteOrder : a + b;
}

std::size_t horizon_value(Horizon h) { return h ? *h : kInfiniteOrder; }

}  // namespace

Series::Series(Terms terms, Horizon horizon) : terms_(std::move(terms)), horizon_(horizon) {
  std::erase_if(terms_, [&](const auto& kv) {
    return kv.second == 0 || (horizon_ && kv.first.size() > *horizon_);
  });
}

Series Series::constant(const Rational& value) { return monomial(Word{}, value); }

Series Series::monomial(const Word& w, const Rational& coeff) {
  Terms t;
  t.emplace(w, coeff);
  return Series(std::move(t));
}

Rational Series::coefficient(const Word& w) const {
  if (horizon_ && w.size() > *horizon_) {
    throw TruncationError("coefficient of " + to_string(w) + " lies beyond the horizon " +
                          std::to_string(*horizon_));
  }
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coefficient(Word{}); }

std::size_t Series::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

int Series::max_letter() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

Series add(const Series& a, const Series& b) {
  Series::Terms t = a.terms();
  for (const auto& [w, c] : b.terms()) t[w] += c;
  return Series(std::move(t), min_horizon(a.horizon(), b.horizon()));
}

Series scalar_mul(const Rational& alpha, const Series& c) {
  if (alpha == 0) return Series({}, c.horizon());
  Series::Terms t;
  for (const auto& [w, v] : c.terms()) t.emplace(w, alpha * v);
  return Series(std::move(t), c.horizon());
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a) { return scalar_mul(-1, a); }
Series operator-(const Series& a, const Series& b) { return add(a, -b); }
Series operator*(const Rational& alpha, const Series& c) { return scalar_mul(alpha, c); }

std::size_t order_lower_bound(const Series& c) {
  if (!c.is_zero()) return order(c);
  return c.horizon() ? *c.horizon() + 1 : kInfiniteOrder;
}

Horizon product_horizon(const Series& a, const Series& b) {
  if (a.is_exact() && b.is_exact()) return std::nullopt;
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) return std::nullopt;
  const std::size_t from_a = a.horizon() ? saturating_add(*a.horizon(), order_lower_bound(b)) : kInfiniteOrder;
  const std::size_t from_b = b.horizon() ? saturating_add(*b.horizon(), order_lower_bound(a)) : kInfiniteOrder;
  return std::min(from_a, from_b);
}

Series concat(const Series& a, const Series& b) {
  const Horizon h = product_horizon(a, b);
  const std::size_t limit = horizon_value(h);
  Series::Terms t;
  for (const auto& [u, alpha] : a.terms()) {
    for (const auto& [v, beta] : b.terms()) {
      if (u.size() + v.size() > limit) break;
      t[u + v] += alpha * beta;
    }
  }
  return Series(std::move(t), h);
}

Series shuffle(const Series& a, const Series& b) {
  const Horizon h = product_horizon(a, b);
  const std::size_t limit = horizon_value(h);
  const bool parallel = a.size() * b.size() >= kernels::kParallelPairThreshold;
  auto terms = parallel ? kernels::shuffle_terms_parallel(a.terms(), b.terms(), limit)
                        : kernels::shuffle_terms_serial(a.terms(), b.terms(), limit);
  return Series(std::move(terms), h);
}

Series shuffle(const Word& a, const Word& b) {
  Series::Terms t;
  for (auto& [w, n] : kernels::shuffle_words(a, b)) {
    t.emplace(std::move(w), Rational(Integer(static_cast<unsigned long>(n))));
  }
  return Series(std::move(t));
}

Series shuffle_power(const Series& c, unsigned k) {
  Series result = Series::one();
  for (unsigned i = 0; i < k; ++i) result = shuffle(result, c);
  return result;
}

Series left_shift(const Word& prefix, const Series& c) {
  Horizon h = c.horizon();
  if (h) {
    if (*h < prefix.size()) {
      throw TruncationError("left shift by " + to_string(prefix) + " exceeds the horizon " + std::to_string(*h));
    }
    h = *h - prefix.size();
  }
  Series::Terms t;
  for (const auto& [w, v] : c.terms()) {
    if (w.starts_with(prefix)) t.emplace(w.slice(prefix.size()), v);
  }
  return Series(std::move(t), h);
}

Series natural_part(const Series& c) {
  Series::Terms t;
  for (const auto& [w, v] : c.terms()) {
    if (w.leading_run(0) == w.size()) t.emplace(w, v);
  }
  return Series(std::move(t), c.horizon());
}

Series forced_part(const Series& c) {
  Series::Terms t;
  for (const auto& [w, v] : c.terms()) {
    if (w.leading_run(0) != w.size()) t.emplace(w, v);
  }
  return Series(std::move(t), c.horizon());
}

std::size_t order(const Series& c) {
  if (c.is_zero()) return kInfiniteOrder;
  return c.terms().begin()->first.size();
}

bool is_proper(const Series& c) { return c.constant_term() == 0; }

Series truncate(const Series& c, std::size_t n) {
  Series::Terms t;
  for (const auto& [w, v] : c.terms()) {
    if (w.size() > n) break;
    t.emplace(w, v);
  }
  return Series(std::move(t), min_horizon(c.horizon(), n));
}

bool equal_through(const Series& a, const Series& b, std::size_t n) {
  for (const Series* s : {&a, &b}) {
    if (s->horizon() && *s->horizon() < n) {
      throw TruncationError("comparison through length " + std::to_string(n) + " exceeds the horizon " +
                            std::to_string(*s->horizon()));
    }
  }
  return truncate(a, n).terms() == truncate(b, n).terms();
}

}  // namespace fliess
