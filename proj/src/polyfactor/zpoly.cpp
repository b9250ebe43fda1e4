#include <algorithm>
#include <mutex>

#include "fliess/errors.hpp"
#include "univariate.hpp"

namespace fliess::detail {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  // Cheap rejection on the constant terms.
  if (b.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t())) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= q[k] * b[j];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

std::uint64_t large_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  Integer candidate = primes.empty() ? Integer((1u << 31) - 1) : Integer(primes.back() - 2);
  while (primes.size() <= i) {
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
    primes.push_back(candidate.get_ui());
    candidate -= 2;
  }
  return primes[i];
}

namespace {

// Coefficientwise Chinese remaindering of h (mod m) with hp (mod p).
void crt_combine(ZPoly& h, Integer& m, const ModPoly& hp, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  Integer m_inv;
  mpz_invert(m_inv.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
  h.resize(std::max(h.size(), hp.size()));
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Integer target(static_cast<unsigned long>(i < hp.size() ? hp[i] : 0));
    Integer delta = (target - h[i]) * m_inv;
    mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), P.get_mpz_t());
    h[i] += m * delta;
  }
  m *= P;
}

ZPoly symmetric(const ZPoly& h, const Integer& m) {
  const Integer half = m / 2;
  ZPoly r = h;
  for (auto& c : r) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(r);
  return r;
}

}  // namespace

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) == 0 || degree(b) == 0) return ZPoly{1};
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  long best = std::min(degree(a), degree(b)) + 1;
  ZPoly h;
  Integer m = 1;
  for (std::size_t i = 0; i < 4096; ++i) {
    const std::uint64_t p = large_prime(i);
    if (mpz_fdiv_ui(gamma.get_mpz_t(), p) == 0) continue;
    const Field F{p};
    ModPoly g = gcd(F, reduce(a, p), reduce(b, p));
    if (degree(g) == 0) return ZPoly{1};
    const std::uint64_t scale = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = F.mul(c, scale);
    if (degree(g) > best) continue;
    if (degree(g) < best) {
      best = degree(g);
      h.clear();
      m = 1;
    }
    crt_combine(h, m, g, p);
    ZPoly candidate = primitive_part(symmetric(h, m));
    if (divide_exact(a, candidate) && divide_exact(b, candidate)) return candidate;
  }
  throw Error("modular gcd did not converge");
}

}  // namespace fliess::detail
