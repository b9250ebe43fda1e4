#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fliess {

// Exact arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

}  // namespace fliess
