#include "lifting.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "fliess/errors.hpp"
#include "fliess/polyfactor.hpp"
#include "univariate.hpp"

namespace fliess::detail {

namespace {

using CP = CommutativePolynomial;

// Dense univariate polynomials over Q, index = power of x.
using QPoly = std::vector<Rational>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divrem(a, b, q, r);
  return r;
}

// s with s a = 1 mod b, for coprime a and b.
QPoly inverse_mod(const QPoly& a, const QPoly& b) {
  QPoly r0 = b, r1 = rem(a, b), s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divrem(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error("lifting images are not coprime");
  for (auto& c : s0) c /= r0[0];
  return s0;
}

QPoly monic(QPoly f) {
  const Rational lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

// Multivariate helpers with a distinguished main variable x; the other
// variables are the y's, and "y-degree" is total degree minus x-degree.
struct Frame {
  Variable x;
  VariableFamily family;

  std::uint32_t ydeg(const Monomial& m) const { return m.total_degree() - m.degree(x); }

  std::uint32_t ydeg(const CP& p) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, ydeg(m));
    return d;
  }

  CP truncate(const CP& p, std::uint32_t k) const {
    CP::Terms t;
    for (const auto& [m, c] : p.terms())
      if (ydeg(m) <= k) t.emplace(m, c);
    return CP(std::move(t), family);
  }

  CP mul(const CP& a, const CP& b, std::uint32_t k) const {
    CP::Terms t;
    for (const auto& [ma, ca] : a.terms()) {
      const std::uint32_t da = ydeg(ma);
      if (da > k) continue;
      for (const auto& [mb, cb] : b.terms())
        if (da + ydeg(mb) <= k) t[ma * mb] += ca * cb;
    }
    return CP(std::move(t), family);
  }

  CP pow(const CP& a, unsigned e, std::uint32_t k) const {
    CP out = CP::constant(1, family);
    for (unsigned i = 0; i < e; ++i) out = mul(out, a, k);
    return out;
  }

  CP from_univariate(const QPoly& f, const Monomial& y = Monomial()) const {
    CP::Terms t;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != 0) t.emplace(y * Monomial::variable(x, static_cast<std::uint32_t>(i)), f[i]);
    return CP(std::move(t), family);
  }

  // The y-degree-k part of p, as a univariate polynomial in x per y-monomial.
  std::map<Monomial, QPoly, MonomialLess> slice(const CP& p, std::uint32_t k) const {
    std::map<Monomial, QPoly, MonomialLess> out;
    for (const auto& [m, c] : p.terms()) {
      if (ydeg(m) != k) continue;
      const std::uint32_t e = m.degree(x);
      std::vector<Monomial::Factor> rest;
      for (const auto& f : m.factors())
        if (f.first != x) rest.push_back(f);
      QPoly& q = out[Monomial(std::move(rest))];
      if (q.size() <= e) q.resize(e + 1, Rational(0));
      q[e] = c;
    }
    return out;
  }

  // p with v -> v + lambda_v x + shift_v for every y-variable v.
  CP substitute(const CP& p, const std::map<Variable, Rational>& lambda, const std::map<Variable, Rational>& shift) const {
    std::map<std::pair<Variable, std::uint32_t>, CP> powers;
    auto power = [&](Variable v, std::uint32_t e) -> const CP& {
      auto it = powers.find({v, e});
      if (it != powers.end()) return it->second;
      const CP base = CP::variable(v, family) + CP::monomial(Monomial::variable(x), lambda.at(v), family) +
                      CP::constant(shift.at(v), family);
      return powers.emplace(std::pair{v, e}, fliess::pow(base, e)).first->second;
    };
    CP out(family);
    for (const auto& [m, c] : p.terms()) {
      CP t = CP::monomial(Monomial::variable(x, m.degree(x)), c, family);
      for (const auto& [v, e] : m.factors())
        if (v != x) t = t * power(v, e);
      out += t;
    }
    return out;
  }
};

// Failure of a particular evaluation point; the caller tries another.
struct Unlucky {};

// Lifts F = prod H_i mod (y)^(bound+1) from monic pairwise coprime images
// h_i with prod h_i = F(x, 0). F must be monic in x.
std::vector<CP> lift(const Frame& fr, const CP& F, const std::vector<QPoly>& h, std::uint32_t bound) {
  const std::size_t r = h.size();
  std::vector<CP> H;
  for (const auto& hi : h) H.push_back(fr.from_univariate(hi));
  if (r == 1) {
    H[0] = F;
    return H;
  }
  std::vector<QPoly> u(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly others{Rational(1)};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = mul(others, h[j]);
    u[i] = inverse_mod(rem(others, h[i]), h[i]);
  }
  for (std::uint32_t k = 1; k <= bound; ++k) {
    CP product = CP::constant(1, fr.family);
    for (const CP& Hi : H) product = fr.mul(product, Hi, k);
    const CP error = fr.truncate(F, k) - product;
    for (const auto& [y, c] : fr.slice(error, k))
      for (std::size_t i = 0; i < r; ++i) H[i] += fr.from_univariate(rem(mul(c, u[i]), h[i]), y);
  }
  return H;
}

// S with S^e = P, S(x, 0) = s, for P monic in x.
CP root(const Frame& fr, const CP& P, unsigned e, const QPoly& s, std::uint32_t bound) {
  CP S = fr.from_univariate(s);
  if (e == 1) return P;
  QPoly denom{Rational(e)};
  for (unsigned i = 1; i < e; ++i) denom = mul(denom, s);
  for (std::uint32_t k = 1; k <= bound; ++k) {
    const CP error = fr.truncate(P, k) - fr.pow(S, e, k);
    for (const auto& [y, c] : fr.slice(error, k)) {
      QPoly q, r;
      divrem(c, denom, q, r);
      if (!r.empty()) throw Unlucky{};
      S += fr.from_univariate(q, y);
    }
  }
  return S;
}

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

// Irreducible factors of S, monic in x, from its lifted image factors.
std::vector<CP> recombine(const Frame& fr, const CP& S, std::vector<CP> H) {
  std::vector<CP> out;
  CP remaining = S;
  std::size_t s = 1;
  while (2 * s <= H.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    const std::uint32_t bound = fr.ydeg(remaining);
    do {
      CP g = CP::constant(1, fr.family);
      for (std::size_t i : idx) g = fr.mul(g, H[i], bound);
      auto quotient = divide_exact(remaining, g);
      if (!quotient) continue;
      out.push_back(g);
      remaining = std::move(*quotient);
      for (std::size_t k = idx.size(); k-- > 0;) H.erase(H.begin() + static_cast<long>(idx[k]));
      found = true;
      break;
    } while (next_combination(idx, H.size()));
    if (!found) ++s;
  }
  if (!remaining.is_constant()) out.push_back(remaining);
  return out;
}

std::optional<std::vector<CP>> attempt(const CP& f, const Frame& fr, const std::map<Variable, Rational>& lambda,
                                       const std::map<Variable, Rational>& shift) {
  const std::uint32_t D = f.total_degree();
  CP F = fr.substitute(f, lambda, shift);
  const Rational lc = F.coefficient(Monomial::variable(fr.x, D));
  if (lc == 0) return std::nullopt;
  F = Rational(1) / lc * F;

  // Image at y = 0, cleared of denominators for the integer factorizer.
  QPoly f0;
  for (const auto& [m, c] : F.terms()) {
    if (fr.ydeg(m) != 0) continue;
    const std::uint32_t e = m.degree(fr.x);
    if (f0.size() <= e) f0.resize(e + 1, Rational(0));
    f0[e] = c;
  }
  Integer den = 1;
  for (const auto& c : f0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z0;
  for (const auto& c : f0) z0.push_back(Integer(c * den));

  // Irreducible image factors grouped by multiplicity.
  std::map<unsigned, std::vector<QPoly>> by_multiplicity;
  {
    std::vector<std::pair<QPoly, unsigned>> grouped;
    for (const ZPoly& g : factor_over_z(z0)) {
      QPoly q;
      for (const auto& c : g) q.push_back(Rational(c));
      q = monic(q);
      auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto& e) { return e.first == q; });
      if (it == grouped.end()) grouped.emplace_back(q, 1);
      else ++it->second;
    }
    for (auto& [q, e] : grouped) by_multiplicity[e].push_back(std::move(q));
  }

  std::vector<unsigned> mults;
  std::vector<QPoly> squarefree, blocks;
  for (const auto& [e, qs] : by_multiplicity) {
    QPoly s{Rational(1)};
    for (const QPoly& q : qs) s = mul(s, q);
    QPoly b{Rational(1)};
    for (unsigned i = 0; i < e; ++i) b = mul(b, s);
    mults.push_back(e);
    squarefree.push_back(std::move(s));
    blocks.push_back(std::move(b));
  }

  const std::uint32_t bound = fr.ydeg(F);
  const std::vector<CP> P = lift(fr, F, blocks, bound);
  std::vector<CP> factors;
  CP check = CP::constant(1, fr.family);
  for (std::size_t b = 0; b < P.size(); ++b) {
    const unsigned e = mults[b];
    const CP S = root(fr, P[b], e, squarefree[b], bound / e);
    const std::vector<QPoly>& images = by_multiplicity[e];
    for (const CP& g : recombine(fr, S, lift(fr, S, images, fr.ydeg(S)))) {
      for (unsigned i = 0; i < e; ++i) {
        factors.push_back(g);
        check = check * g;
      }
    }
  }
  if (check != F) return std::nullopt;

  std::map<Variable, Rational> back_lambda, back_shift;
  for (const auto& [v, l] : lambda) back_lambda[v] = -l;
  for (const auto& [v, s] : shift) back_shift[v] = -s;
  for (CP& g : factors) g = fr.substitute(g, back_lambda, back_shift);
  return factors;
}

}  // namespace

std::vector<CommutativePolynomial> factor_by_lifting(const CommutativePolynomial& f) {
  const std::vector<Variable> vars = f.variables();
  if (vars.empty()) return {};
  // A variable of top degree keeps the images short.
  Variable x = vars.front();
  for (Variable v : vars)
    if (f.degree(v) > f.degree(x)) x = v;
  const Frame fr{x, f.family()};

  std::mt19937_64 rng(0x11f7'5eedULL);
  for (int tries = 0; tries < 24; ++tries) {
    // Small points first, widening on repeated bad luck.
    const long width = 2 + tries / 4;
    std::uniform_int_distribution<long> pick(-width, width);
    std::map<Variable, Rational> lambda, shift;
    for (Variable v : vars) {
      if (v == x) continue;
      lambda[v] = pick(rng);
      shift[v] = pick(rng);
    }
    try {
      if (auto factors = attempt(f, fr, lambda, shift)) return *factors;
    } catch (const Unlucky&) {
    } catch (const Error&) {
    }
  }
  throw CapacityError("no usable evaluation point for multivariate lifting");
}

}  // namespace fliess::detail
