#pragma once

#include <string_view>

#include "fliess/commutative.hpp"
#include "fliess/realization.hpp"
#include "fliess/series.hpp"

namespace fliess {

// Grammar, whitespace-insensitive between tokens:
//   sum     := ['+'|'-'] product (('+'|'-') product)* [('+') 'O' '(' INT ')']
//   product := power (['*'] power | '/' INT)*
//   power   := primary ['^' INT]
//   primary := INT | variable | '(' sum ')'
// Juxtaposition and '*' multiply: concatenation for series, the commutative
// product otherwise. "O(k)" marks a series known only through length k - 1.
// Errors raise ParseError with the 1-based line and column.

// Letters x0 .. x{alphabet_size - 1}.
Series parse_series(std::string_view text, unsigned alphabet_size = 2);
// Variables l<digits> or z<digits>, one family per polynomial. Constants
// take `fallback` as their family.
CommutativePolynomial parse_commutative(std::string_view text, VariableFamily fallback = VariableFamily::Lyndon);
// Polynomial in t.
TimePolynomial parse_time_polynomial(std::string_view text);
// A single word with coefficient 1, such as "x0x1x0", "x0^2 x1" or "1".
Word parse_word(std::string_view text, unsigned alphabet_size = 2);

}  // namespace fliess
