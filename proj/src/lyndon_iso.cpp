#include "fliess/lyndon_iso.hpp"

#include "fliess/errors.hpp"

namespace fliess {

std::size_t lyndon_weight(const Monomial& m, unsigned alphabet_size) {
  std::size_t w = 0;
  for (const auto& [v, e] : m.factors()) w += e * lyndon_word(LyndonIndex{v}, alphabet_size).size();
  return w;
}

const CommutativePolynomial& LyndonMap::to_lyndon(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  if (w.max_letter() >= static_cast<int>(alphabet_)) {
    throw DomainError("word " + to_string(w) + " uses a letter outside the alphabet");
  }
  if (w.empty()) {
    return memo_.emplace(w, CommutativePolynomial::constant(1)).first->second;
  }

  const std::vector<Word> factors = cfl_factorize(w);
  CommutativePolynomial product = CommutativePolynomial::constant(1);
  Series shuffled = Series::one();
  for (const Word& f : factors) {
    product = product * CommutativePolynomial::variable(
                            static_cast<Variable>(lyndon_index(f, alphabet_).value));
    shuffled = shuffle(shuffled, Series::monomial(f));
  }
  if (factors.size() == 1) {
    a_.emplace(w, 1);
    return memo_.emplace(w, std::move(product)).first->second;
  }

  // l_{i1} ... l_{in} shuffled = a w + R with every word of R below w.
  const Rational a = shuffled.coefficient(w);
  if (a == 0) throw Error("Lyndon recursion: word missing from its own factor shuffle");
  a_.emplace(w, a);
  CommutativePolynomial rest;
  for (const auto& [v, coeff] : shuffled.terms()) {
    if (v == w) continue;
    if (!(v < w)) throw Error("Lyndon recursion: remainder word not below " + to_string(w));
    rest += coeff * to_lyndon(v);
  }
  CommutativePolynomial result = (1 / a) * (product - rest);
  return memo_.emplace(w, std::move(result)).first->second;
}

CommutativePolynomial LyndonMap::to_lyndon(const Series& c) {
  if (!c.is_exact()) throw DomainError("the Lyndon map needs a polynomial, not a truncated series");
  CommutativePolynomial out;
  for (const auto& [w, coeff] : c.terms()) out += coeff * to_lyndon(w);
  return out;
}

Series LyndonMap::from_lyndon(const CommutativePolynomial& p) const {
  Series out;
  for (const auto& [m, coeff] : p.terms()) {
    Series term = Series::constant(coeff);
    for (const auto& [v, e] : m.factors()) {
      const Series letter = Series::monomial(lyndon_word(LyndonIndex{v}, alphabet_));
      for (std::uint32_t k = 0; k < e; ++k) term = shuffle(term, letter);
    }
    out = out + term;
  }
  return out;
}

CommutativePolynomial to_lyndon(const Series& c, unsigned alphabet_size) {
  return LyndonMap(alphabet_size).to_lyndon(c);
}

Series from_lyndon(const CommutativePolynomial& p, unsigned alphabet_size) {
  return LyndonMap(alphabet_size).from_lyndon(p);
}

}  // namespace fliess
