#include "fliess/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

#include "fliess/errors.hpp"

namespace fliess::kernels {

namespace {

using Accumulator = std::unordered_map<Word, Rational, WordHash>;

std::vector<WordCount> prefixed(Letter x, const std::vector<WordCount>& src) {
  std::vector<WordCount> out;
  out.reserve(src.size());
  for (const auto& [w, n] : src) {
    std::vector<Letter> letters;
    letters.reserve(w.size() + 1);
    letters.push_back(x);
    letters.insert(letters.end(), w.begin(), w.end());
    out.emplace_back(Word(std::move(letters)), n);
  }
  return out;
}

// Both inputs sorted; equal words have their counts summed.
std::vector<WordCount> merge_sorted(std::vector<WordCount> lhs, std::vector<WordCount> rhs) {
  std::vector<WordCount> out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() && j != rhs.end()) {
    if (i->first < j->first) {
      out.push_back(std::move(*i++));
    } else if (j->first < i->first) {
      out.push_back(std::move(*j++));
    } else {
      out.emplace_back(std::move(i->first), i->second + j->second);
      ++i;
      ++j;
    }
  }
  std::move(i, lhs.end(), std::back_inserter(out));
  std::move(j, rhs.end(), std::back_inserter(out));
  return out;
}

void accumulate_pair(const Word& u, const Rational& alpha, const Word& v, const Rational& beta,
                     Accumulator& acc) {
  const Rational ab = alpha * beta;
  for (auto& [w, n] : shuffle_words(u, v)) {
    acc[w] += ab * Rational(Integer(static_cast<unsigned long>(n)));
  }
}

Series::Terms finish(Accumulator& acc) {
  Series::Terms out;
  for (auto& [w, c] : acc) {
    if (c != 0) out.emplace(w, std::move(c));
  }
  return out;
}

}  // namespace

std::vector<WordCount> shuffle_words(const Word& a, const Word& b) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  if (p + q > 62) throw CapacityError("word shuffle longer than 62 letters");
  if (p == 0) return {{b, 1}};
  if (q == 0) return {{a, 1}};

  // row[j] holds the shuffle of a[i:] with b[j:], kept sorted; the table is
  // swept from the bottom-right corner with one row of storage per i.
  std::vector<std::vector<WordCount>> next(q + 1);
  for (std::size_t j = 0; j <= q; ++j) next[j] = {{b.slice(j), 1}};
  for (std::size_t ii = p; ii-- > 0;) {
    std::vector<std::vector<WordCount>> row(q + 1);
    row[q] = {{a.slice(ii), 1}};
    for (std::size_t jj = q; jj-- > 0;) {
      auto left = prefixed(a[ii], next[jj]);
      auto right = prefixed(b[jj], row[jj + 1]);
      if (a[ii] < b[jj]) {
        left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
        row[jj] = std::move(left);
      } else if (b[jj] < a[ii]) {
        right.insert(right.end(), std::make_move_iterator(left.begin()), std::make_move_iterator(left.end()));
        row[jj] = std::move(right);
      } else {
        row[jj] = merge_sorted(std::move(left), std::move(right));
      }
    }
    next = std::move(row);
  }
  return std::move(next[0]);
}

Series::Terms shuffle_terms_serial(const Series::Terms& a, const Series::Terms& b, std::size_t max_len) {
  Accumulator acc;
  for (const auto& [u, alpha] : a) {
    if (u.size() > max_len) break;
    for (const auto& [v, beta] : b) {
      if (u.size() + v.size() > max_len) break;
      accumulate_pair(u, alpha, v, beta, acc);
    }
  }
  return finish(acc);
}

Series::Terms shuffle_terms_parallel(const Series::Terms& a, const Series::Terms& b, std::size_t max_len) {
  std::vector<const Series::Terms::value_type*> lhs;
  lhs.reserve(a.size());
  for (const auto& term : a) {
    if (term.first.size() > max_len) break;
    lhs.push_back(&term);
  }
  const int threads = omp_get_max_threads();
  std::vector<Accumulator> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::ptrdiff_t>(lhs.size());

#pragma omp parallel num_threads(threads)
  {
    Accumulator& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& [u, alpha] = *lhs[static_cast<std::size_t>(i)];
      for (const auto& [v, beta] : b) {
        if (u.size() + v.size() > max_len) break;
        accumulate_pair(u, alpha, v, beta, acc);
      }
    }
  }

  // Exact addition is associative, so the merge order cannot change the result.
  Accumulator total = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [w, c] : partial[t]) total[w] += c;
  }
  return finish(total);
}

}  // namespace fliess::kernels
