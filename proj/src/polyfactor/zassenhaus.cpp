#include <algorithm>

#include "fliess/errors.hpp"
#include "univariate.hpp"

namespace fliess::detail {

namespace {

// Beyond these the exponential recombination or cubic Berlekamp step would
// not finish at desk scale.
constexpr long kMaxUnivariateDegree = 1024;
constexpr std::size_t kMaxModularFactors = 24;
constexpr unsigned long kFirstSmallPrime = 101;

ZPoly symmetric_mod(ZPoly f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

// 2 |lc| 2^n (||f||_2 + 1): twice a bound on lc times any factor's coefficients.
Integer coefficient_bound(const ZPoly& f) {
  Integer sq = 0;
  for (const auto& c : f) sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
  return bound;
}

struct ModularImage {
  std::uint64_t p = 0;
  ModPoly f;
  std::vector<ModPoly> basis;
};

ModularImage choose_prime(const ZPoly& f) {
  const std::size_t trials = degree(f) <= 64 ? 5 : degree(f) <= 256 ? 3 : 1;
  ModularImage best;
  Integer prime = kFirstSmallPrime;
  std::size_t good = 0;
  for (int attempts = 0; good < trials && attempts < 2000; ++attempts) {
    const std::uint64_t p = prime.get_ui();
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    const Field F{p};
    ModPoly fp = monic(F, reduce(f, p));
    if (degree(gcd(F, fp, derivative(F, fp))) != 0) continue;
    ++good;
    std::vector<ModPoly> basis = berlekamp_basis(F, fp);
    if (best.p == 0 || basis.size() < best.basis.size()) best = {p, std::move(fp), std::move(basis)};
    if (best.basis.size() == 1) break;
  }
  if (best.p == 0) throw Error("no suitable prime for modular factorization");
  return best;
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

// Irreducible factors of a primitive squarefree f with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (degree(f) <= 1) return {f};
  if (degree(f) > kMaxUnivariateDegree) {
    throw CapacityError("univariate image of degree " + std::to_string(degree(f)) + " exceeds " +
                        std::to_string(kMaxUnivariateDegree));
  }
  ModularImage image = choose_prime(f);
  if (image.basis.size() == 1) return {f};
  if (image.basis.size() > kMaxModularFactors) {
    throw CapacityError(std::to_string(image.basis.size()) + " modular factors exceed the recombination limit");
  }

  std::mt19937_64 rng(0x5eed'f00dULL);
  const Field F{image.p};
  const std::vector<ModPoly> modular = berlekamp_split(F, image.f, image.basis, rng);

  const Integer bound = coefficient_bound(f);
  Integer modulus = static_cast<unsigned long>(image.p);
  while (modulus <= bound) modulus *= modulus;
  std::vector<ZPoly> lifted = hensel_lift(f, modular, image.p, modulus);

  std::vector<ZPoly> result;
  ZPoly g = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      const Integer& lc = g.back();
      if (g.front() != 0) {
        Integer c0 = lc;
        for (std::size_t i : idx) c0 *= lifted[i].front();
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
        if (c0 > modulus / 2) c0 -= modulus;
        if (c0 == 0 || !mpz_divisible_p(Integer(lc * g.front()).get_mpz_t(), c0.get_mpz_t())) continue;
      }
      ZPoly candidate{lc};
      for (std::size_t i : idx) candidate = symmetric_mod(mul(candidate, lifted[i]), modulus);
      candidate = primitive_part(candidate);
      auto quotient = divide_exact(g, candidate);
      if (!quotient) continue;
      result.push_back(std::move(candidate));
      g = std::move(*quotient);
      for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (degree(g) > 0) result.push_back(primitive_part(g));
  return result;
}

}  // namespace

std::vector<ZPoly> factor_over_z(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  std::vector<ZPoly> out;
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  for (std::size_t i = 0; i < k; ++i) out.push_back(ZPoly{0, 1});
  f.erase(f.begin(), f.begin() + static_cast<long>(k));
  if (degree(f) <= 0) return out;

  const ZPoly repeated = gcd(f, derivative(f));
  const ZPoly squarefree = degree(repeated) == 0 ? f : primitive_part(*divide_exact(f, repeated));
  for (const ZPoly& q : factor_squarefree(squarefree)) {
    while (auto quotient = divide_exact(f, q)) {
      out.push_back(q);
      f = std::move(*quotient);
    }
  }
  if (degree(f) != 0) throw Error("univariate factorization lost a factor");
  return out;
}

}  // namespace fliess::detail
