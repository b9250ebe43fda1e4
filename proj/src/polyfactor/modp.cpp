#include <algorithm>

#include "univariate.hpp"

namespace fliess::detail {

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ModPoly reduce(const ZPoly& f, std::uint64_t p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  trim(r);
  return r;
}

ModPoly mul(const Field& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  }
  trim(r);
  return r;
}

ModPoly sub(const Field& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

void divrem(const Field& F, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = F.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

ModPoly rem(const Field& F, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divrem(F, a, b, q, r);
  return r;
}

ModPoly monic(const Field& F, const ModPoly& f) {
  if (f.empty()) return f;
  const std::uint64_t inv = F.inv(f.back());
  ModPoly r = f;
  for (auto& c : r) c = F.mul(c, inv);
  return r;
}

ModPoly gcd(const Field& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

ModPoly ext_gcd(const Field& F, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divrem(F, r0, r1, q, r);
    ModPoly s2 = sub(F, s0, mul(F, q, s1));
    ModPoly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = std::move(s0);
  t = std::move(t0);
  return monic(F, r0);
}

ModPoly powmod(const Field& F, const ModPoly& base, Integer e, const ModPoly& f) {
  ModPoly result{1};
  ModPoly b = rem(F, base, f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(F, mul(F, result, b), f);
    e >>= 1;
    if (e > 0) b = rem(F, mul(F, b, b), f);
  }
  return result;
}

ModPoly derivative(const Field& F, const ModPoly& f) {
  ModPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(F.mul(f[i], i % F.p));
  trim(r);
  return r;
}

std::vector<ModPoly> berlekamp_basis(const Field& F, const ModPoly& f) {
  const std::size_t n = f.size() - 1;
  // Row i of Q holds y^(p i) mod f.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  const ModPoly yp = powmod(F, ModPoly{0, 1}, Integer(static_cast<unsigned long>(F.p)), f);
  ModPoly row{1};
  for (std::size_t i = 0; i < n; ++i) {
    // Column-major storage of (Q - I)^T: a[j][i] = Q[i][j] - delta.
    for (std::size_t j = 0; j < row.size(); ++j) a[j][i] = row[j];
    a[i][i] = F.sub(a[i][i], 1);
    row = rem(F, mul(F, row, yp), f);
  }

  // Reduced row echelon form; free columns give the kernel.
  std::vector<long> pivot_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t sel = rank;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[rank]);
    const std::uint64_t inv = F.inv(a[rank][col]);
    for (auto& v : a[rank]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (std::size_t c = col; c < n; ++c) {
        if (a[rank][c] != 0) a[r][c] = F.sub(a[r][c], F.mul(factor, a[rank][c]));
      }
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }

  std::vector<ModPoly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (pivot_of_col[col] >= 0) v[col] = F.sub(0, a[pivot_of_col[col]][free]);
    }
    trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ModPoly> berlekamp_split(const Field& F, const ModPoly& f, const std::vector<ModPoly>& basis,
                                     std::mt19937_64& rng) {
  std::vector<ModPoly> factors{monic(F, f)};
  const Integer half = Integer(static_cast<unsigned long>((F.p - 1) / 2));
  std::uniform_int_distribution<std::uint64_t> coeff(0, F.p - 1);
  while (factors.size() < basis.size()) {
    ModPoly v;
    for (const auto& b : basis) {
      const std::uint64_t c = coeff(rng);
      ModPoly scaled = b;
      for (auto& x : scaled) x = F.mul(x, c);
      v = sub(F, v, scaled);
    }
    std::vector<ModPoly> next;
    for (const auto& g : factors) {
      if (g.size() <= 2) {
        next.push_back(g);
        continue;
      }
      ModPoly w = sub(F, powmod(F, v, half, g), ModPoly{1});
      ModPoly d = gcd(F, g, w);
      if (d.size() > 1 && d.size() < g.size()) {
        ModPoly q, r;
        divrem(F, g, d, q, r);
        next.push_back(std::move(d));
        next.push_back(monic(F, q));
      } else {
        next.push_back(g);
      }
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace fliess::detail
