#include "fliess/format.hpp"

#include "fliess/errors.hpp"
#include "fliess/parse.hpp"

namespace fliess {

namespace {

// Appends one signed term; an empty body means a constant term.
void append_term(std::string& out, const Rational& coeff, const std::string& body) {
  const bool negative = coeff < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational magnitude = abs(coeff);
  if (body.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += to_string(magnitude) + " " + body;
  }
}

std::string render_monomial(const Monomial& m, VariableFamily family) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += " ";
    out += static_cast<char>(family);
    out += std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

[[noreturn]] void bad_json(const std::string& what) { throw ParseError("invalid JSON document: " + what, 1, 1); }

Rational coeff_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const DomainError& e) {
    bad_json(e.what());
  }
  bad_json("coefficients must be strings \"p/q\" or integers");
}

// [0, 1, 0] or "x0x1x0".
Word word_from_json(const Json& w) {
  if (w.is_string()) return parse_word(w.get<std::string>());
  if (!w.is_array()) bad_json("words must be arrays of letter indices");
  std::vector<Letter> letters;
  for (const auto& x : w) {
    if (!x.is_number_unsigned() || x.get<unsigned>() > 1) bad_json("letter indices must be 0 or 1");
    letters.push_back(static_cast<Letter>(x.get<unsigned>()));
  }
  return Word(std::move(letters));
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_json(std::string("missing \"") + key + "\"");
  return j.at(key);
}

CommutativePolynomial state_polynomial(const Json& j) {
  if (j.is_object()) return commutative_from_json(j, VariableFamily::State);
  if (j.is_string()) return parse_commutative(j.get<std::string>(), VariableFamily::State);
  if (j.is_array()) {
    CommutativePolynomial sum(VariableFamily::State);
    for (const auto& term : j) {
      if (!term.is_string()) bad_json("polynomial arrays must hold expression strings");
      sum += parse_commutative(term.get<std::string>(), VariableFamily::State);
    }
    return sum;
  }
  bad_json("a polynomial must be an object, a string or an array of strings");
}

}  // namespace

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string render(const Series& c) {
  std::string out;
  for (const auto& [w, coeff] : c.terms()) append_term(out, coeff, w.empty() ? "" : render_word(w));
  if (c.horizon()) {
    out += (out.empty() ? "O(" : " + O(") + std::to_string(*c.horizon() + 1) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string render(const CommutativePolynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, it->second, render_monomial(it->first, p.family()));
  }
  return out.empty() ? "0" : out;
}

std::string render(const TimePolynomial& u) {
  std::string out;
  const auto& cs = u.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    if (k == 0) {
      append_term(out, c, "");
      continue;
    }
    const bool negative = c < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Integer num = abs(c.get_num());
    if (num != 1) out += num.get_str() + " ";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
    if (c.get_den() != 1) out += "/" + c.get_den().get_str();
  }
  return out.empty() ? "0" : out;
}

std::string render_cfl(const std::vector<Word>& factors) {
  std::string out;
  for (const Word& w : factors) out += "(" + to_string(w) + ")";
  return out;
}

Json to_json(const Series& c) {
  Json terms = Json::array();
  for (const auto& [w, coeff] : c.terms()) {
    Json letters = Json::array();
    for (Letter x : w) letters.push_back(x);
    terms.push_back({{"coeff", to_string(coeff)}, {"word", std::move(letters)}});
  }
  Json j;
  j["terms"] = std::move(terms);
  j["horizon"] = c.horizon() ? Json(*c.horizon()) : Json(nullptr);
  return j;
}

Json to_json(const CommutativePolynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::object();
    for (const auto& [v, e] : it->first.factors()) mono[std::to_string(v)] = e;
    terms.push_back({{"coeff", to_string(it->second)}, {"monomial", std::move(mono)}});
  }
  Json j;
  j["family"] = std::string(1, static_cast<char>(p.family()));
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const NullabilityReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  const bool defined = r.relative_degree && r.relative_degree->defined();
  j["relative_degree"] = defined ? Json(*r.relative_degree->r) : Json(nullptr);
  j["K"] = defined ? Json(to_string(r.relative_degree->K)) : Json(nullptr);
  j["undefined_reason"] = r.relative_degree && !defined ? Json(std::string(to_string(r.relative_degree->reason)))
                                                         : Json(nullptr);
  j["nulling_series"] = r.nulling_series ? to_json(r.nulling_series->series()) : Json(nullptr);
  j["residual_order"] = r.residual_order ? Json(*r.residual_order) : Json(nullptr);
  return j;
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [q, k] : f.factors) factors.push_back({{"polynomial", to_json(q)}, {"multiplicity", k}});
  Json j;
  j["unit"] = to_string(f.unit);
  j["factors"] = std::move(factors);
  return j;
}

Json to_json(const ShuffleFactorization& f) {
  Json factors = Json::array();
  for (const auto& factor : f.factors) {
    factors.push_back(
        {{"series", to_json(factor.series)}, {"multiplicity", factor.multiplicity}, {"lyndon", to_json(factor.lyndon)}});
  }
  Json j;
  j["unit"] = to_string(f.unit);
  j["factors"] = std::move(factors);
  return j;
}

Json to_json(const NullableAnalysis& a) {
  Json factors = Json::array();
  for (const auto& fa : a.factors) {
    factors.push_back({{"series", to_json(fa.factor.series)},
                       {"multiplicity", fa.factor.multiplicity},
                       {"report", to_json(fa.report)}});
  }
  Json j;
  j["unit"] = to_string(a.unit);
  j["factors"] = std::move(factors);
  return j;
}

Series series_from_json(const Json& j) {
  Series::Terms terms;
  for (const auto& t : member(j, "terms")) {
    terms[word_from_json(member(t, "word"))] += coeff_from_json(member(t, "coeff"));
  }
  Horizon horizon;
  if (j.contains("horizon") && !j.at("horizon").is_null()) {
    if (!j.at("horizon").is_number_unsigned()) bad_json("horizon must be a nonnegative integer or null");
    horizon = j.at("horizon").get<std::size_t>();
  }
  return Series(std::move(terms), horizon);
}

CommutativePolynomial commutative_from_json(const Json& j, VariableFamily fallback) {
  VariableFamily family = fallback;
  if (j.contains("family")) {
    const Json& f = j.at("family");
    if (f == "l") {
      family = VariableFamily::Lyndon;
    } else if (f == "z") {
      family = VariableFamily::State;
    } else {
      bad_json("family must be \"l\" or \"z\"");
    }
  }
  CommutativePolynomial::Terms terms;
  for (const auto& t : member(j, "terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [key, e] : member(t, "monomial").items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 8) {
        bad_json("monomial keys must be variable indices");
      }
      if (!e.is_number_unsigned()) bad_json("exponents must be nonnegative integers");
      factors.emplace_back(static_cast<Variable>(std::stoul(key)), e.get<std::uint32_t>());
    }
    terms[Monomial(std::move(factors))] += coeff_from_json(member(t, "coeff"));
  }
  return CommutativePolynomial(std::move(terms), family);
}

Realization realization_from_json(const Json& j) {
  Realization sys;
  const Json& n = member(j, "n");
  if (!n.is_number_unsigned()) bad_json("n must be a nonnegative integer");
  sys.n = n.get<std::size_t>();
  for (const auto& z : member(j, "z0")) sys.z0.push_back(coeff_from_json(z));
  for (const auto& g : member(j, "g0")) sys.g0.push_back(state_polynomial(g));
  for (const auto& g : member(j, "g1")) sys.g1.push_back(state_polynomial(g));
  sys.h = state_polynomial(member(j, "h"));
  sys.validate();
  return sys;
}

}  // namespace fliess
