#include "fliess/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "fliess/errors.hpp"

namespace fliess {

namespace {

enum class Tok { Number, Name, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    std::size_t j = i;
    Tok kind;
    if (std::isdigit(ch)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::Number;
    } else if (std::isalpha(ch)) {
      ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::Name;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(ch)) != std::string_view::npos) {
      ++j;
      kind = Tok::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", line, col);
    }
    out.push_back({kind, std::string(s.substr(i, j - i)), line, col});
    advance(j - i);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Recursive-descent parser over an algebra A providing
//   Value number(Integer), variable(Token), one();
//   Value add(Value, Value), mul(Value, Value), scale(Value, Rational),
//   pow(Value, unsigned), truncation(size_t, Token).
template <class A>
class Parser {
 public:
  using Value = typename A::Value;

  Parser(std::string_view text, A& algebra) : tokens_(tokenize(text)), a_(algebra) {}

  Value parse() {
    if (peek().kind == Tok::End) fail("empty expression");
    Value v = sum(true);
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_symbol(char c) const { return peek().kind == Tok::Symbol && peek().text[0] == c; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }

  void expect(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned small_integer() {
    if (peek().kind != Tok::Number) fail("expected an integer");
    const Token& t = take();
    if (t.text.size() > 6) throw ParseError("integer " + t.text + " is too large here", t.line, t.column);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  bool at_truncation() const {
    return peek().kind == Tok::Name && peek().text == "O" && pos_ + 1 < tokens_.size() &&
           tokens_[pos_ + 1].kind == Tok::Symbol && tokens_[pos_ + 1].text == "(";
  }

  Value sum(bool top) {
    Value acc = a_.zero();
    bool first = true;
    for (;;) {
      bool negate = false;
      if (at_symbol('+') || at_symbol('-')) {
        negate = take().text == "-";
      } else if (!first) {
        break;
      }
      if (top && at_truncation()) {
        if (negate) fail("a truncation marker cannot be negated");
        const Token& at = take();
        ++pos_;
        const unsigned k = small_integer();
        expect(')');
        acc = a_.truncation(acc, k, at);
        if (peek().kind != Tok::End) fail("the truncation marker must come last");
        break;
      }
      Value term = product();
      acc = a_.add(acc, negate ? a_.scale(term, -1) : term);
      first = false;
    }
    return acc;
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.kind == Tok::Number || (t.kind == Tok::Name && !at_truncation()) || (t.kind == Tok::Symbol && t.text == "(");
  }

  Value product() {
    Value acc = power();
    for (;;) {
      if (at_symbol('*')) {
        ++pos_;
        acc = a_.mul(acc, power());
      } else if (at_symbol('/')) {
        ++pos_;
        const Token& t = peek();
        if (t.kind != Tok::Number) fail("only division by an integer is supported");
        ++pos_;
        const Integer d(t.text);
        if (d == 0) throw ParseError("division by zero", t.line, t.column);
        acc = a_.scale(acc, Rational(1) / Rational(d));
      } else if (starts_primary()) {
        acc = a_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = primary();
    if (at_symbol('^')) {
      ++pos_;
      base = a_.pow(base, small_integer());
    }
    return base;
  }

  Value primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return a_.number(Integer(t.text));
    }
    if (t.kind == Tok::Name) {
      ++pos_;
      return a_.variable(t);
    }
    if (at_symbol('(')) {
      ++pos_;
      Value v = sum(false);
      expect(')');
      return v;
    }
    if (t.kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  A& a_;
};

std::optional<std::size_t> index_of(const Token& t, char prefix) {
  if (t.text.size() < 2 || t.text[0] != prefix) return std::nullopt;
  if (t.text.size() > 8) throw ParseError("variable index too large in " + t.text, t.line, t.column);
  return std::stoul(t.text.substr(1));
}

struct SeriesAlgebra {
  using Value = Series;
  unsigned alphabet;

  Value zero() const { return Series(); }
  Value number(const Integer& n) const { return Series::constant(Rational(n)); }
  Value variable(const Token& t) const {
    auto k = index_of(t, 'x');
    if (!k) throw ParseError("unknown symbol '" + t.text + "'; letters are x0, x1, ...", t.line, t.column);
    if (*k >= alphabet) {
      throw ParseError("unknown letter " + t.text + " for an alphabet of size " + std::to_string(alphabet), t.line,
                       t.column);
    }
    return Series::monomial(Word::letter(static_cast<Letter>(*k)));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return concat(a, b); }
  Value scale(const Value& a, const Rational& r) const { return r * a; }
  Value pow(const Value& a, unsigned k) const {
    Series out = Series::one();
    for (unsigned i = 0; i < k; ++i) out = concat(out, a);
    return out;
  }
  Value truncation(const Value& acc, unsigned k, const Token& t) const {
    if (k == 0) throw ParseError("O(0) leaves no known coefficient", t.line, t.column);
    return acc + Series(Series::Terms{}, k - 1);
  }
};

struct CommutativeAlgebra {
  using Value = CommutativePolynomial;
  VariableFamily fallback;
  std::optional<VariableFamily> family;

  Value zero() const { return CommutativePolynomial(fallback); }
  Value number(const Integer& n) const { return CommutativePolynomial::constant(Rational(n), fallback); }
  Value variable(const Token& t) {
    VariableFamily f;
    std::optional<std::size_t> k;
    if ((k = index_of(t, 'l'))) {
      f = VariableFamily::Lyndon;
    } else if ((k = index_of(t, 'z'))) {
      f = VariableFamily::State;
    } else {
      throw ParseError("unknown symbol '" + t.text + "'; variables are l<digits> or z<digits>", t.line, t.column);
    }
    if (family && *family != f) throw ParseError("variables from both the l and z families", t.line, t.column);
    family = f;
    return CommutativePolynomial::variable(static_cast<Variable>(*k), f);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Rational& r) const { return r * a; }
  Value pow(const Value& a, unsigned k) const { return fliess::pow(a, k); }
  Value truncation(const Value&, unsigned, const Token& t) const {
    throw ParseError("truncation markers apply only to series", t.line, t.column);
  }
};

struct TimeAlgebra {
  using Value = TimePolynomial;

  Value zero() const { return {}; }
  Value number(const Integer& n) const { return TimePolynomial::constant(Rational(n)); }
  Value variable(const Token& t) const {
    if (t.text != "t") throw ParseError("unknown symbol '" + t.text + "'; the variable is t", t.line, t.column);
    return TimePolynomial::t();
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Rational& r) const { return r * a; }
  Value pow(const Value& a, unsigned k) const {
    TimePolynomial out = TimePolynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
  }
  Value truncation(const Value&, unsigned, const Token& t) const {
    throw ParseError("truncation markers apply only to series", t.line, t.column);
  }
};

}  // namespace

Series parse_series(std::string_view text, unsigned alphabet_size) {
  SeriesAlgebra a{alphabet_size};
  return Parser<SeriesAlgebra>(text, a).parse();
}

CommutativePolynomial parse_commutative(std::string_view text, VariableFamily fallback) {
  CommutativeAlgebra a{fallback, std::nullopt};
  CommutativePolynomial p = Parser<CommutativeAlgebra>(text, a).parse();
  if (p.is_constant() && p.family() != fallback) {
    return CommutativePolynomial(CommutativePolynomial::Terms(p.terms()), fallback);
  }
  return p;
}

TimePolynomial parse_time_polynomial(std::string_view text) {
  TimeAlgebra a;
  return Parser<TimeAlgebra>(text, a).parse();
}

Word parse_word(std::string_view text, unsigned alphabet_size) {
  const Series s = parse_series(text, alphabet_size);
  if (!s.is_exact() || s.size() != 1 || s.terms().begin()->second != 1) {
    throw ParseError("expected a single word such as x0x1x0", 1, 1);
  }
  return s.terms().begin()->first;
}

}  // namespace fliess
