#pragma once

#include <string>

#include "fliess/commutative.hpp"
#include "fliess/format.hpp"
#include "fliess/parse.hpp"
#include "fliess/series.hpp"

namespace testing_util {

inline fliess::Series S(const std::string& text) { return fliess::parse_series(text); }
inline fliess::CommutativePolynomial P(const std::string& text) { return fliess::parse_commutative(text); }
inline fliess::CommutativePolynomial Z(const std::string& text) {
  return fliess::parse_commutative(text, fliess::VariableFamily::State);
}

// Factors of the worked factorization example, and their shuffle product
// listed term by term.
inline const char* const kFactor1 = "x0 + x1 + x0 x1 x0";
inline const char* const kFactor2 = "x0 - x1 + x1 x0 x1";
inline const char* const kProduct =
    "2 x0^2 - 2 x1^2 + 2 x0^2 x1 x0 + 2 x0 x1 x0^2 - 2 x0 x1^2 x0"
    " + 2 x1 x0^2 x1 + 2 x1 x0 x1^2 + 2 x1^2 x0 x1 + 2 x0 x1 x0 x1 x0 x1"
    " + 2 x0 x1 x0 x1^2 x0 + 4 x0 x1^2 x0^2 x1 + 2 x0 x1^2 x0 x1 x0"
    " + 2 x1 x0^2 x1 x0 x1 + 4 x1 x0^2 x1^2 x0 + 2 x1 x0 x1 x0^2 x1"
    " + 2 x1 x0 x1 x0 x1 x0";
inline const char* const kProductLyndon =
    "l0^2 - l1^2 + l0^2 l2 + l1^2 l2 + l0 l1 l2^2 - 2 l0 l3"
    " + 2 l1 l3 - 2 l1 l2 l3 - 2 l0 l4 - 2 l1 l4 - 2 l0 l2 l4 + 4 l3 l4";

}  // namespace testing_util
