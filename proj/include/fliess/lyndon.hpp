#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fliess/word.hpp"

namespace fliess {

// Position of a Lyndon word in the enumeration ordered by length and then
// lexicographically: over {x0, x1}, l0 = x0, l1 = x1, l2 = x0x1, l3 = x0^2x1, ...
struct LyndonIndex {
  std::size_t value = 0;
  friend auto operator<=>(const LyndonIndex&, const LyndonIndex&) = default;
};

inline constexpr unsigned kBinaryAlphabet = 2;

bool is_lyndon(const Word& w);

// Chen-Fox-Lyndon factorization by Duval's algorithm: the unique
// non-increasing sequence of Lyndon words whose concatenation is w.
// Linear time. Throws DomainError on the empty word.
std::vector<Word> cfl_factorize(const Word& w);

// Number of Lyndon words of length n over an alphabet of the given size.
std::uint64_t lyndon_count(std::size_t n, unsigned alphabet_size = kBinaryAlphabet);

// All Lyndon words of exactly length n, in lexicographic order.
const std::vector<Word>& lyndon_words_of_length(std::size_t n,
                                                unsigned alphabet_size = kBinaryAlphabet);

// All Lyndon words of length <= max_len in canonical order.
std::vector<Word> lyndon_enumerate(std::size_t max_len, unsigned alphabet_size = kBinaryAlphabet);

LyndonIndex lyndon_index(const Word& w, unsigned alphabet_size = kBinaryAlphabet);
Word lyndon_word(LyndonIndex i, unsigned alphabet_size = kBinaryAlphabet);

}  // namespace fliess
