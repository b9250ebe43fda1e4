#include "fliess/commutative.hpp"

#include <algorithm>

#include "fliess/errors.hpp"

namespace fliess {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree(Variable v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.degree(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Factor> out;
  for (const auto& [v, e] : other.factors_) {
    const std::uint32_t mine = degree(v);
    if (e > mine) out.emplace_back(v, e - mine);
  }
  return Monomial(std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Monomial(std::move(f));
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // The monomial holding the lower-indexed variable has the larger exponent there.
      return fa[i].first < fb[j].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
    ++i;
    ++j;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (j < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

CommutativePolynomial::CommutativePolynomial(Terms terms, VariableFamily family)
    : family_(family), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

CommutativePolynomial CommutativePolynomial::constant(const Rational& value, VariableFamily family) {
  return monomial(Monomial{}, value, family);
}

CommutativePolynomial CommutativePolynomial::variable(Variable v, VariableFamily family) {
  return monomial(Monomial::variable(v), 1, family);
}

CommutativePolynomial CommutativePolynomial::monomial(const Monomial& m, const Rational& coeff,
                                                      VariableFamily family) {
  Terms t;
  t.emplace(m, coeff);
  return CommutativePolynomial(std::move(t), family);
}

bool CommutativePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CommutativePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t CommutativePolynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::uint32_t CommutativePolynomial::degree(Variable v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

std::vector<Variable> CommutativePolynomial::variables() const {
  std::vector<Variable> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

CommutativePolynomial CommutativePolynomial::derivative(Variable v) const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.degree(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> f;
    for (const auto& factor : m.factors()) {
      f.emplace_back(factor.first, factor.first == v ? factor.second - 1 : factor.second);
    }
    out[Monomial(std::move(f))] += c * e;
  }
  return CommutativePolynomial(std::move(out), family_);
}

Rational CommutativePolynomial::evaluate(const std::map<Variable, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) {
        term = 0;
        break;
      }
      Rational power = 1;
      for (std::uint32_t i = 0; i < e; ++i) power *= it->second;
      term *= power;
    }
    sum += term;
  }
  return sum;
}

namespace {

VariableFamily joined_family(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  if (a.family() == b.family()) return a.family();
  if (a.is_constant()) return b.family();
  if (b.is_constant()) return a.family();
  throw DomainError("polynomials over different variable families cannot be combined");
}

}  // namespace

CommutativePolynomial& CommutativePolynomial::operator+=(const CommutativePolynomial& other) {
  family_ = joined_family(*this, other);
  for (const auto& [m, c] : other.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

CommutativePolynomial& CommutativePolynomial::operator-=(const CommutativePolynomial& other) {
  return *this += -other;
}

CommutativePolynomial operator-(const CommutativePolynomial& a) { return Rational(-1) * a; }

CommutativePolynomial operator*(const Rational& alpha, const CommutativePolynomial& a) {
  CommutativePolynomial::Terms t;
  if (alpha != 0) {
    for (const auto& [m, c] : a.terms()) t.emplace_hint(t.end(), m, alpha * c);
  }
  return CommutativePolynomial(std::move(t), a.family());
}

CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  const VariableFamily family = joined_family(a, b);
  CommutativePolynomial::Terms t;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) t[ma * mb] += ca * cb;
  }
  return CommutativePolynomial(std::move(t), family);
}

CommutativePolynomial pow(const CommutativePolynomial& p, unsigned k) {
  CommutativePolynomial result = CommutativePolynomial::constant(1, p.family());
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

bool canonical_less(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (auto c = graded_lex(ia->first, ib->first); c != 0) return c < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

}  // namespace fliess
