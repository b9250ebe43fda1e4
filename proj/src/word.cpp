#include "fliess/word.hpp"

#include <algorithm>

namespace fliess {

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) letters_.push_back(static_cast<Letter>(x));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() && std::equal(prefix.begin(), prefix.end(), begin());
}

std::size_t Word::count(Letter x) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

std::size_t Word::leading_run(Letter x) const {
  std::size_t n = 0;
  while (n < letters_.size() && letters_[n] == x) ++n;
  return n;
}

int Word::max_letter() const {
  if (letters_.empty()) return -1;
  return *std::max_element(letters_.begin(), letters_.end());
}

std::strong_ordering lex_compare(const Word& a, const Word& b) { return a <=> b; }

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter x : w) {
    s += 'x';
    s += std::to_string(static_cast<int>(x));
  }
  return s;
}

}  // namespace fliess
