#pragma once

#include <cstddef>
#include <unordered_map>

#include "fliess/commutative.hpp"
#include "fliess/lyndon.hpp"
#include "fliess/series.hpp"

namespace fliess {

// Sum of exponent * |lyndon_word(index)|; mirrors word length.
std::size_t lyndon_weight(const Monomial& m, unsigned alphabet_size = kBinaryAlphabet);

// The shuffle-algebra isomorphism onto polynomials in Lyndon variables.
// Holds the per-word memo, so reuse one instance across related calls.
class LyndonMap {
 public:
  explicit LyndonMap(unsigned alphabet_size = kBinaryAlphabet) : alphabet_(alphabet_size) {}

  // Throws DomainError for truncated input or letters outside the alphabet.
  CommutativePolynomial to_lyndon(const Series& c);
  const CommutativePolynomial& to_lyndon(const Word& w);
  Series from_lyndon(const CommutativePolynomial& p) const;

  // Coefficient a of the word itself in the shuffle of its CFL factors, for
  // every word mapped so far.
  const std::unordered_map<Word, Rational, WordHash>& leading_multiplicities() const { return a_; }

 private:
  unsigned alphabet_;
  std::unordered_map<Word, CommutativePolynomial, WordHash> memo_;
  std::unordered_map<Word, Rational, WordHash> a_;
};

CommutativePolynomial to_lyndon(const Series& c, unsigned alphabet_size = kBinaryAlphabet);
Series from_lyndon(const CommutativePolynomial& p, unsigned alphabet_size = kBinaryAlphabet);

}  // namespace fliess
