#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fliess {

// x_k is stored as the integer k; x0 < x1 < ... < xm.
using Letter = std::uint8_t;

// A finite sequence of letters. Ordering is plain lexicographic, so a
// proper prefix precedes all of its extensions.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(Letter x) { return Word(std::vector<Letter>{x}); }
  static Word power(Letter x, std::size_t n) { return Word(std::vector<Letter>(n, x)); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word slice(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  bool starts_with(const Word& prefix) const;
  std::size_t count(Letter x) const;
  // Number of leading letters equal to x.
  std::size_t leading_run(Letter x) const;
  // Largest letter index, or -1 for the empty word.
  int max_letter() const;

  Word& append(Letter x) {
    letters_.push_back(x);
    return *this;
  }
  Word& append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }

  friend Word operator+(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::strong_ordering lex_compare(const Word& a, const Word& b);

// Length first, then lexicographic. Canonical term order for series.
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull ^ w.size();
    for (Letter x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// "x0x1x0"; the empty word is "1".
std::string to_string(const Word& w);

}  // namespace fliess
