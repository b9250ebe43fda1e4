#include <algorithm>
#include <map>

#include "fliess/errors.hpp"
#include "fliess/polyfactor.hpp"
#include "lifting.hpp"
#include "univariate.hpp"

namespace fliess {

namespace {

using detail::ZPoly;

constexpr std::size_t kMaxKroneckerDegree = 1024;
constexpr std::size_t kMaxRecombinationPool = 24;

// Content-free integer multiple with positive leading coefficient; the
// scale factor applied is returned through `scale`.
CommutativePolynomial normalize(const CommutativePolynomial& p, Rational& scale) {
  Integer den = 1;
  Integer num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  scale = Rational(den, num);
  scale.canonicalize();
  if (p.leading_term().second < 0) scale = -scale;
  return scale * p;
}

CommutativePolynomial normalize(const CommutativePolynomial& p) {
  Rational scale;
  return normalize(p, scale);
}

struct Kronecker {
  std::vector<Variable> vars;
  std::vector<std::uint32_t> bound;  // per-variable degree bound
  std::vector<std::size_t> base;     // y-exponent of each variable
  std::size_t limit = 1;             // exponents below this decode uniquely

  explicit Kronecker(const CommutativePolynomial& p) : vars(p.variables()) {
    for (Variable v : vars) {
      bound.push_back(p.degree(v));
      base.push_back(limit);
      limit *= bound.back() + 1;
    }
  }

  ZPoly image(const CommutativePolynomial& p) const {
    std::size_t top = 0;
    for (const auto& [m, c] : p.terms()) top = std::max(top, exponent(m));
    if (top > kMaxKroneckerDegree) {
      throw CapacityError("Kronecker image of degree " + std::to_string(top) + " exceeds " +
                          std::to_string(kMaxKroneckerDegree));
    }
    ZPoly f(top + 1);
    for (const auto& [m, c] : p.terms()) f[exponent(m)] = c.get_num();
    detail::trim(f);
    return f;
  }

  std::optional<CommutativePolynomial> preimage(const ZPoly& g, VariableFamily family) const {
    if (g.size() > limit) return std::nullopt;
    CommutativePolynomial::Terms terms;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] == 0) continue;
      std::vector<Monomial::Factor> f;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        f.emplace_back(vars[j], static_cast<std::uint32_t>(k / base[j] % (bound[j] + 1)));
      }
      terms.emplace(Monomial(std::move(f)), Rational(g[k]));
    }
    return CommutativePolynomial(std::move(terms), family);
  }

 private:
  std::size_t exponent(const Monomial& m) const {
    std::size_t e = 0;
    for (std::size_t j = 0; j < vars.size(); ++j) e += m.degree(vars[j]) * base[j];
    return e;
  }
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool fits(const CommutativePolynomial& candidate, const CommutativePolynomial& target) {
  if (candidate.total_degree() > target.total_degree()) return false;
  for (Variable v : candidate.variables()) {
    if (candidate.degree(v) > target.degree(v)) return false;
  }
  return true;
}

// Irreducible factors, with repetition, of a primitive integer polynomial
// with no monomial content.
std::vector<CommutativePolynomial> factor_primitive(const CommutativePolynomial& p) {
  const Kronecker kron(p);
  std::vector<ZPoly> pool = detail::factor_over_z(kron.image(p));
  if (pool.size() > kMaxRecombinationPool) {
    throw CapacityError(std::to_string(pool.size()) + " univariate factors exceed the recombination limit");
  }

  std::vector<CommutativePolynomial> result;
  CommutativePolynomial remaining = p;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{1};
      for (std::size_t i : idx) g = detail::mul(g, pool[i]);
      auto candidate = kron.preimage(g, p.family());
      if (!candidate || !fits(*candidate, remaining)) continue;
      auto quotient = divide_exact(remaining, *candidate);
      if (!quotient) continue;
      result.push_back(normalize(*candidate));
      remaining = std::move(*quotient);
      for (std::size_t k = idx.size(); k-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[k]));
      found = true;
      break;
    } while (next_combination(idx, pool.size()));
    if (!found) ++s;
  }
  if (!remaining.is_constant()) result.push_back(normalize(remaining));
  return result;
}

// p with every variable v replaced by v + shift[v].
CommutativePolynomial translate(const CommutativePolynomial& p, const std::map<Variable, Integer>& shift) {
  CommutativePolynomial out(p.family());
  for (const auto& [m, c] : p.terms()) {
    CommutativePolynomial t = CommutativePolynomial::constant(c, p.family());
    for (const auto& [v, e] : m.factors()) {
      const CommutativePolynomial moved =
          CommutativePolynomial::variable(v, p.family()) + CommutativePolynomial::constant(Rational(shift.at(v)), p.family());
      t = t * pow(moved, e);
    }
    out += t;
  }
  return out;
}

// Binomial-like factors map to y^a (y^m - 1) under the substitution and
// shatter into cyclotomic pieces. When the pool overflows, factor a
// translate instead (translation is a ring automorphism) and move back.
std::vector<CommutativePolynomial> factor_translating(const CommutativePolynomial& p) {
  try {
    return factor_primitive(p);
  } catch (const CapacityError&) {
    const std::vector<Variable> vars = p.variables();
    for (long attempt = 1; attempt <= 4; ++attempt) {
      std::map<Variable, Integer> forward, back;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        const long s = 1 + static_cast<long>((attempt * 5 + 3 * j) % 7);
        forward[vars[j]] = (j + static_cast<std::size_t>(attempt)) % 2 ? s : -s;
        back[vars[j]] = -forward[vars[j]];
      }
      try {
        std::vector<CommutativePolynomial> factors = factor_primitive(normalize(translate(p, forward)));
        for (auto& q : factors) q = normalize(translate(q, back));
        return factors;
      } catch (const CapacityError&) {
      }
    }
    throw;
  }
}

}  // namespace

std::optional<CommutativePolynomial> divide_exact(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  CommutativePolynomial quotient(a.family());
  CommutativePolynomial r = a;
  const auto& [lead_m, lead_c] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [m, c] = r.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    const CommutativePolynomial t = CommutativePolynomial::monomial(lead_m.quotient_of(m), c / lead_c, a.family());
    quotient += t;
    r -= t * b;
  }
  return quotient;
}

CommutativePolynomial expand(const Factorization& f, VariableFamily family) {
  CommutativePolynomial out = CommutativePolynomial::constant(f.unit, family);
  for (const auto& [q, k] : f.factors) out = out * pow(q, k);
  return out;
}

namespace {

template <class Primitive>
Factorization factor_with(const CommutativePolynomial& p, Primitive primitive) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out;
  if (p.is_constant()) {
    out.unit = p.leading_term().second;
    return out;
  }

  CommutativePolynomial prim = normalize(p);

  // Monomial content: each variable to its smallest exponent.
  std::vector<CommutativePolynomial> irreducibles;
  std::vector<Monomial::Factor> shared;
  for (Variable v : prim.variables()) {
    std::uint32_t e = prim.degree(v);
    for (const auto& [m, c] : prim.terms()) e = std::min(e, m.degree(v));
    if (e == 0) continue;
    shared.emplace_back(v, e);
    for (std::uint32_t i = 0; i < e; ++i) irreducibles.push_back(CommutativePolynomial::variable(v, p.family()));
  }
  if (!shared.empty()) {
    prim = *divide_exact(prim, CommutativePolynomial::monomial(Monomial(shared), 1, p.family()));
  }
  if (!prim.is_constant()) {
    for (auto& q : primitive(prim)) irreducibles.push_back(normalize(q));
  }

  std::sort(irreducibles.begin(), irreducibles.end(), canonical_less);
  for (auto& q : irreducibles) {
    if (!out.factors.empty() && out.factors.back().first == q) {
      ++out.factors.back().second;
    } else {
      out.factors.emplace_back(std::move(q), 1);
    }
  }

  out.unit = 1;
  const CommutativePolynomial product = expand(out, p.family());
  out.unit = p.leading_term().second / product.leading_term().second;
  if (out.unit * product != p) throw Error("factorization failed its reconstruction check");
  return out;
}

}  // namespace

Factorization KroneckerBackend::factor(const CommutativePolynomial& p) const {
  return factor_with(p, factor_translating);
}

Factorization LiftingBackend::factor(const CommutativePolynomial& p) const {
  return factor_with(p, detail::factor_by_lifting);
}

Factorization HybridBackend::factor(const CommutativePolynomial& p) const {
  return factor_with(p, [](const CommutativePolynomial& q) {
    try {
      return detail::factor_by_lifting(q);
    } catch (const CapacityError&) {
      return factor_translating(q);
    }
  });
}

const FactorBackend& default_factor_backend() {
  static const HybridBackend backend;
  return backend;
}

Factorization factor(const CommutativePolynomial& p, const FactorBackend& backend) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.variables().size() > kFactorMaxVariables) {
    throw CapacityError("factorization supports at most " + std::to_string(kFactorMaxVariables) + " variables");
  }
  if (p.total_degree() > kFactorMaxTotalDegree) {
    throw CapacityError("factorization supports total degree at most " + std::to_string(kFactorMaxTotalDegree));
  }
  return backend.factor(p);
}

bool is_irreducible(const CommutativePolynomial& p, const FactorBackend& backend) {
  if (p.is_constant()) throw DomainError("irreducibility is undefined for constants");
  const Factorization f = factor(p, backend);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

}  // namespace fliess
