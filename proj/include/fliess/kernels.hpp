#pragma once

// Hot inner loops of the series algebra. Each parallel kernel has a serial
// twin with identical output; the serial versions are the reference the
// tests and benchmarks compare against.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fliess/series.hpp"

namespace fliess::kernels {

using WordCount = std::pair<Word, std::uint64_t>;

// Shuffle of two words as (word, multiplicity) pairs in lexicographic order.
// Throws CapacityError when |a| + |b| exceeds 62 (multiplicities would overflow).
std::vector<WordCount> shuffle_words(const Word& a, const Word& b);

// Bilinear shuffle of two term maps keeping only words of length <= max_len.
Series::Terms shuffle_terms_serial(const Series::Terms& a, const Series::Terms& b, std::size_t max_len);
Series::Terms shuffle_terms_parallel(const Series::Terms& a, const Series::Terms& b, std::size_t max_len);

// Pair count above which shuffle() hands off to the parallel kernel.
inline constexpr std::size_t kParallelPairThreshold = 256;

}  // namespace fliess::kernels
