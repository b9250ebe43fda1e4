#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fliess/commutative.hpp"
#include "fliess/nullability.hpp"
#include "fliess/polyfactor.hpp"
#include "fliess/realization.hpp"
#include "fliess/series.hpp"
#include "fliess/shuffle_factor.hpp"

namespace fliess {

using Json = nlohmann::ordered_json;

// Text forms accepted back by the parsers in parse.hpp.
std::string render(const Series& c);             // "2 x0^2 - x1 x0 + O(11)"
std::string render_word(const Word& w);          // "x0^2 x1"; "1" for the empty word
std::string render(const CommutativePolynomial& p);  // "l0 l2 - 2 l3"
std::string render(const TimePolynomial& u);     // "t^2/2 - 1"
std::string render_cfl(const std::vector<Word>& factors);  // "(x0x1)(x0)"

Json to_json(const Series& c);
Json to_json(const CommutativePolynomial& p);
Json to_json(const NullabilityReport& r);
Json to_json(const Factorization& f);
Json to_json(const NullableAnalysis& a);
Json to_json(const ShuffleFactorization& f);

// Throw ParseError on malformed documents.
Series series_from_json(const Json& j);
CommutativePolynomial commutative_from_json(const Json& j, VariableFamily fallback = VariableFamily::Lyndon);
// {"n":..,"z0":[..],"g0":[..],"g1":[..],"h":..}; each polynomial is a
// {"terms":[..]} object, an expression string, or an array of term strings.
Realization realization_from_json(const Json& j);

}  // namespace fliess
