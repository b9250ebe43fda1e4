#include "fliess/lyndon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "fliess/errors.hpp"
#include "fliess/rational.hpp"

namespace fliess {

namespace {

constexpr std::size_t kMaxEnumeratedLength = 24;

void check_alphabet(const Word& w, unsigned alphabet_size) {
  if (w.max_letter() >= static_cast<int>(alphabet_size)) {
    throw DomainError("word " + to_string(w) + " uses a letter outside an alphabet of size " +
                      std::to_string(alphabet_size));
  }
}

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Fredricksen-Kessler-Maiorana generation, which visits every Lyndon word of
// length <= n in lexicographic order; keep only those of length exactly n.
std::vector<Word> generate_length(std::size_t n, unsigned k) {
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (w.size() == n) {
      std::vector<Letter> letters(w.begin(), w.end());
      out.emplace_back(std::move(letters));
    }
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
  }
  return out;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  return cfl_factorize(w).size() == 1;
}

std::vector<Word> cfl_factorize(const Word& w) {
  if (w.empty()) throw DomainError("Chen-Fox-Lyndon factorization of the empty word");
  const std::size_t n = w.size();
  std::vector<Word> factors;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.push_back(w.slice(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

std::uint64_t lyndon_count(std::size_t n, unsigned alphabet_size) {
  if (n == 0) return 0;
  Integer total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), alphabet_size, n / d);
    total += mu * p;
  }
  total /= static_cast<unsigned long>(n);
  if (!total.fits_ulong_p()) throw CapacityError("Lyndon word count overflows 64 bits");
  return total.get_ui();
}

const std::vector<Word>& lyndon_words_of_length(std::size_t n, unsigned alphabet_size) {
  if (alphabet_size == 0) throw DomainError("empty alphabet");
  if (n > kMaxEnumeratedLength) {
    throw CapacityError("Lyndon enumeration is limited to length " + std::to_string(kMaxEnumeratedLength));
  }
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::size_t>, std::vector<Word>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(alphabet_size, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, n == 0 ? std::vector<Word>{} : generate_length(n, alphabet_size)).first;
  }
  return it->second;
}

std::vector<Word> lyndon_enumerate(std::size_t max_len, unsigned alphabet_size) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    const auto& level = lyndon_words_of_length(n, alphabet_size);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

LyndonIndex lyndon_index(const Word& w, unsigned alphabet_size) {
  check_alphabet(w, alphabet_size);
  if (!is_lyndon(w)) throw DomainError(to_string(w) + " is not a Lyndon word");
  std::size_t offset = 0;
  for (std::size_t n = 1; n < w.size(); ++n) offset += lyndon_count(n, alphabet_size);
  const auto& level = lyndon_words_of_length(w.size(), alphabet_size);
  auto it = std::lower_bound(level.begin(), level.end(), w);
  return LyndonIndex{offset + static_cast<std::size_t>(it - level.begin())};
}

Word lyndon_word(LyndonIndex i, unsigned alphabet_size) {
  std::size_t rest = i.value;
  for (std::size_t n = 1;; ++n) {
    const std::uint64_t count = lyndon_count(n, alphabet_size);
    if (rest < count) return lyndon_words_of_length(n, alphabet_size)[rest];
    rest -= count;
  }
}

}  // namespace fliess
