#include "fliess/realization.hpp"

#include <unordered_map>

#include "fliess/errors.hpp"

namespace fliess {

namespace {

// Parallel levels below this size are not worth the thread start-up.
constexpr std::size_t kParallelLevelThreshold = 64;

void check_state_variables(const CommutativePolynomial& p, std::size_t n, const char* what) {
  if (!p.is_constant() && p.family() != VariableFamily::State) {
    throw DomainError(std::string(what) + " must be a polynomial in the state variables z1..zn");
  }
  for (Variable v : p.variables()) {
    if (v == 0 || v > n) {
      throw DomainError(std::string(what) + " uses z" + std::to_string(v) + " outside z1..z" + std::to_string(n));
    }
  }
}

std::map<Variable, Rational> initial_point(const Realization& sys) {
  std::map<Variable, Rational> point;
  for (std::size_t j = 0; j < sys.n; ++j) point.emplace(static_cast<Variable>(j + 1), sys.z0[j]);
  return point;
}

struct Node {
  Word word;
  CommutativePolynomial poly;
};

std::vector<Node> next_level(const Realization& sys, const std::vector<Node>& level, bool parallel) {
  std::vector<Node> next(2 * level.size());
  const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long i = 0; i < count; ++i) {
    const Node& node = level[static_cast<std::size_t>(i)];
    for (Letter x : {Letter{0}, Letter{1}}) {
      Node& child = next[2 * static_cast<std::size_t>(i) + x];
      child.word = node.word;
      child.word.append(x);
      child.poly = lie_derivative(node.poly, x == 0 ? sys.g0 : sys.g1);
    }
  }
  std::erase_if(next, [](const Node& n) { return n.poly.is_zero(); });
  return next;
}

Series generate(const Realization& sys, std::size_t n, bool allow_parallel) {
  sys.validate();
  const auto point = initial_point(sys);
  Series::Terms terms;
  std::vector<Node> level;
  if (!sys.h.is_zero()) level.push_back({Word{}, sys.h});
  for (std::size_t len = 0;; ++len) {
    for (const Node& node : level) {
      Rational value = node.poly.evaluate(point);
      if (value != 0) terms.emplace(node.word, std::move(value));
    }
    if (len == n || level.empty()) break;
    level = next_level(sys, level, allow_parallel && level.size() >= kParallelLevelThreshold);
  }
  return Series(std::move(terms));
}

}  // namespace

void Realization::validate() const {
  if (z0.size() != n || g0.size() != n || g1.size() != n) {
    throw DomainError("realization of dimension " + std::to_string(n) + " has mismatched z0/g0/g1 sizes");
  }
  for (const auto& g : g0) check_state_variables(g, n, "g0");
  for (const auto& g : g1) check_state_variables(g, n, "g1");
  check_state_variables(h, n, "h");
}

CommutativePolynomial lie_derivative(const CommutativePolynomial& h, const std::vector<CommutativePolynomial>& g) {
  check_state_variables(h, g.size(), "h");
  for (const auto& field : g) check_state_variables(field, g.size(), "g");
  CommutativePolynomial out(VariableFamily::State);
  for (Variable v : h.variables()) {
    const CommutativePolynomial& field = g[v - 1];
    if (field.is_zero()) continue;
    out += h.derivative(v) * field;
  }
  return out;
}

Series generating_series(const Realization& sys, std::size_t n) { return generate(sys, n, true); }

Series generating_series_serial(const Realization& sys, std::size_t n) { return generate(sys, n, false); }

TimePolynomial::TimePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TimePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TimePolynomial TimePolynomial::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / static_cast<unsigned long>(k + 1);
  return TimePolynomial(std::move(out));
}

TimePolynomial operator+(const TimePolynomial& a, const TimePolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return TimePolynomial(std::move(out));
}

TimePolynomial operator-(const TimePolynomial& a, const TimePolynomial& b) { return a + Rational(-1) * b; }

TimePolynomial operator*(const TimePolynomial& a, const TimePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TimePolynomial(std::move(out));
}

TimePolynomial operator*(const Rational& alpha, const TimePolynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= alpha;
  return TimePolynomial(std::move(out));
}

TimePolynomial iterated_integral(const Word& eta, const TimePolynomial& u) {
  if (eta.max_letter() > 1) throw DomainError("iterated integrals are defined for the alphabet {x0, x1}");
  TimePolynomial e = TimePolynomial::constant(1);
  for (auto it = eta.letters().rbegin(); it != eta.letters().rend(); ++it) {
    e = (*it == 0 ? e : u * e).integral();
  }
  return e;
}

TimePolynomial evaluate_fliess(const Series& c, const TimePolynomial& u, std::size_t n) {
  if (c.max_letter() > 1) throw DomainError("Fliess operators are evaluated for the alphabet {x0, x1}");
  if (c.horizon() && *c.horizon() < n) {
    throw TruncationError("series known through length " + std::to_string(*c.horizon()) +
                          ", evaluation needs " + std::to_string(n));
  }
  // E of each suffix, shared between words.
  std::unordered_map<Word, TimePolynomial, WordHash> memo{{Word{}, TimePolynomial::constant(1)}};
  auto integral_of = [&](const Word& eta) -> const TimePolynomial& {
    // Longest cached suffix, then extend leftwards.
    std::size_t start = 0;
    while (!memo.contains(eta.slice(start))) ++start;
    const TimePolynomial* e = &memo.at(eta.slice(start));
    for (std::size_t i = start; i-- > 0;) {
      TimePolynomial next = (eta[i] == 0 ? *e : u * *e).integral();
      e = &memo.emplace(eta.slice(i), std::move(next)).first->second;
    }
    return *e;
  };
  TimePolynomial y;
  for (const auto& [w, coeff] : c.terms()) {
    if (w.size() > n) break;
    y = y + coeff * integral_of(w);
  }
  return y;
}

TimePolynomial jet_to_polynomial(const Jet& cu, std::size_t degree_cap) {
  if (cu.horizon() && *cu.horizon() < degree_cap) {
    throw TruncationError("jet known through x0^" + std::to_string(*cu.horizon()) + ", polynomial needs degree " +
                          std::to_string(degree_cap));
  }
  std::vector<Rational> coeffs;
  for (const auto& [w, c] : cu.series().terms()) {
    if (w.size() > degree_cap) break;
    coeffs.resize(w.size() + 1);
    coeffs[w.size()] = c / factorial(static_cast<unsigned>(w.size()));
  }
  return TimePolynomial(std::move(coeffs));
}

Jet polynomial_to_jet(const TimePolynomial& u) {
  std::vector<Rational> coeffs(u.coefficients().size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = u.coefficient(k) * factorial(static_cast<unsigned>(k));
  return Jet::from_coefficients(coeffs);
}

}  // namespace fliess
