#include "univariate.hpp"

namespace fliess::detail {

namespace {

void mod_coeffs(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = mul(a, b);
  mod_coeffs(r, m);
  return r;
}

ZPoly sub_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = sub(a, b);
  mod_coeffs(r, m);
  return r;
}

ZPoly add_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = add(a, b);
  mod_coeffs(r, m);
  return r;
}

// Division by a monic h modulo m.
void divrem_monic(const ZPoly& a, const ZPoly& h, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.clear();
  if (a.size() < h.size()) return;
  q.assign(a.size() - h.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = r[k + h.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) r[k + j] -= c * h[j];
  }
  mod_coeffs(q, m);
  mod_coeffs(r, m);
}

ZPoly lift(const ModPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

ModPoly product(const Field& F, const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi) {
  ModPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mul(F, r, fs[i]);
  return r;
}

// One quadratic step: f = g h mod m with s g + t h = 1 mod m, h monic,
// becomes the same relations mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = sub_mod(f, mul(g, h), m2);
  ZPoly q, r;
  divrem_monic(mul_mod(s, e, m2), h, m2, q, r);
  ZPoly g1 = add_mod(add(g, mul(t, e)), mul(q, g), m2);
  ZPoly h1 = add_mod(h, r, m2);

  ZPoly b = sub_mod(add(mul(s, g1), mul(t, h1)), ZPoly{1}, m2);
  ZPoly c, d;
  divrem_monic(mul_mod(s, b, m2), h1, m2, c, d);
  s = sub_mod(s, d, m2);
  t = sub_mod(sub(t, mul(t, b)), mul(c, g1), m2);
  g = std::move(g1);
  h = std::move(h1);
}

// f = lc(f) * prod(factors[lo..hi)) mod p; appends monic lifts mod modulus.
void lift_range(const ZPoly& f, const std::vector<ModPoly>& factors, std::size_t lo, std::size_t hi,
                std::uint64_t p, const Integer& modulus, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    mod_coeffs(r, modulus);
    out.push_back(std::move(r));
    return;
  }
  const Field F{p};
  const std::size_t mid = lo + (hi - lo) / 2;
  ModPoly gp = product(F, factors, lo, mid);
  const std::uint64_t lc = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  for (auto& c : gp) c = F.mul(c, lc);
  const ModPoly hp = product(F, factors, mid, hi);
  ModPoly sp, tp;
  ext_gcd(F, gp, hp, sp, tp);

  ZPoly g = lift(gp), h = lift(hp), s = lift(sp), t = lift(tp);
  Integer m = static_cast<unsigned long>(p);
  while (m < modulus) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  mod_coeffs(g, modulus);
  mod_coeffs(h, modulus);
  lift_range(g, factors, lo, mid, p, modulus, out);
  lift_range(h, factors, mid, hi, p, modulus, out);
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p,
                               const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly fm = f;
  mod_coeffs(fm, modulus);
  lift_range(fm, factors, 0, factors.size(), p, modulus, out);
  return out;
}

}  // namespace fliess::detail
