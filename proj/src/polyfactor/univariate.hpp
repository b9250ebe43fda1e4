#pragma once

// Dense univariate polynomials over Z and Z/p, and factorization over Z.
// Internal to the polyfactor engine.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fliess/rational.hpp"

namespace fliess::detail {

// Coefficient of y^i at index i; no trailing zeros; the zero polynomial is empty.
using ZPoly = std::vector<Integer>;
using ModPoly = std::vector<std::uint64_t>;

void trim(ZPoly& f);
void trim(ModPoly& f);
inline long degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }
inline long degree(const ModPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
Integer content(const ZPoly& f);
// Content removed and leading coefficient made positive.
ZPoly primitive_part(const ZPoly& f);
// Quotient when b divides a exactly over Z.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
// gcd over Z of primitive inputs, primitive with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Arithmetic modulo a prime p < 2^31.
struct Field {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

ModPoly reduce(const ZPoly& f, std::uint64_t p);
ModPoly mul(const Field& F, const ModPoly& a, const ModPoly& b);
ModPoly sub(const Field& F, const ModPoly& a, const ModPoly& b);
ModPoly rem(const Field& F, const ModPoly& a, const ModPoly& b);
void divrem(const Field& F, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly monic(const Field& F, const ModPoly& f);
ModPoly gcd(const Field& F, ModPoly a, ModPoly b);
// s a + t b = gcd(a, b), gcd monic.
ModPoly ext_gcd(const Field& F, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);
ModPoly powmod(const Field& F, const ModPoly& base, Integer e, const ModPoly& f);
ModPoly derivative(const Field& F, const ModPoly& f);

// Berlekamp kernel of a monic squarefree f mod p: its dimension is the number
// of irreducible factors.
std::vector<ModPoly> berlekamp_basis(const Field& F, const ModPoly& f);
// Monic irreducible factors of a monic squarefree f mod p (p odd).
std::vector<ModPoly> berlekamp_split(const Field& F, const ModPoly& f, const std::vector<ModPoly>& basis,
                                     std::mt19937_64& rng);

// Lifts f = lc(f) * prod(factors) mod p to monic factors mod p^k = modulus.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p,
                               const Integer& modulus);

// Irreducible factors over Z of a primitive f of positive degree, with
// repetition, each primitive with positive leading coefficient. The product
// equals f up to sign. y itself appears once per power dividing f.
std::vector<ZPoly> factor_over_z(const ZPoly& f);

// Primes below 2^31 in decreasing order, generated on demand.
std::uint64_t large_prime(std::size_t i);

}  // namespace fliess::detail
