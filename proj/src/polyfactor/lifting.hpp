#pragma once

// Multivariate factorization by evaluation and Hensel lifting. Internal to
// the polyfactor engine; used when the Kronecker image is too large.

#include <vector>

#include "fliess/commutative.hpp"

namespace fliess::detail {

// Irreducible factors over Q, with repetition and up to constant multiples,
// of an integer polynomial with no monomial content. Throws CapacityError
// when no usable evaluation point turns up.
std::vector<CommutativePolynomial> factor_by_lifting(const CommutativePolynomial& f);

}  // namespace fliess::detail
