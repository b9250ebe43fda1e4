#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "fliess/composition.hpp"
#include "fliess/errors.hpp"
#include "fliess/format.hpp"
#include "fliess/lyndon.hpp"
#include "fliess/lyndon_iso.hpp"
#include "fliess/nullability.hpp"
#include "fliess/parse.hpp"
#include "fliess/polyfactor.hpp"
#include "fliess/realization.hpp"
#include "fliess/shuffle_factor.hpp"

namespace fliess::cli {

namespace {

enum class Format { Text, Json };

struct Options {
  std::size_t order = 10;
  Format format = Format::Text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads the argument from a file.
std::string resolve(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
  }
}

bool looks_like_json(const std::string& text) {
  auto it = std::find_if_not(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  return it != text.end() && *it == '{';
}

// Accepts an expression or a JSON series document (as printed with --format json).
Series series_arg(const std::string& arg) {
  const std::string text = resolve(arg);
  return looks_like_json(text) ? series_from_json(parse_json(text)) : parse_series(text);
}

CommutativePolynomial lyndon_polynomial_arg(const std::string& arg) {
  const std::string text = resolve(arg);
  CommutativePolynomial p =
      looks_like_json(text) ? commutative_from_json(parse_json(text)) : parse_commutative(text, VariableFamily::Lyndon);
  if (p.family() != VariableFamily::Lyndon && !p.is_constant()) {
    throw DomainError("expected a polynomial in the Lyndon variables l0, l1, ...");
  }
  return p;
}

class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void operator()(const std::string& text, const Json& json) const {
    if (opts_.format == Format::Json) {
      Json doc{{"schema", "1"}};
      if (json.is_object()) {
        doc.update(json);
      } else {
        doc["result"] = json;
      }
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

std::string factor_lines(const std::string& unit, const std::vector<std::pair<std::string, unsigned>>& factors) {
  std::string text = "unit: " + unit;
  for (const auto& [body, k] : factors) text += "\n(" + body + ")" + (k > 1 ? "^" + std::to_string(k) : "");
  return text;
}

std::string report_text(const NullabilityReport& r) {
  std::string text = "verdict: " + std::string(to_string(r.verdict));
  if (r.relative_degree) {
    const RelativeDegree& rd = *r.relative_degree;
    text += rd.defined() ? "\nrelative degree: " + std::to_string(*rd.r) + " (K = " + to_string(rd.K) + ")"
                         : "\nrelative degree: undefined (" + std::string(to_string(rd.reason)) + ")";
  }
  if (r.nulling_series) text += "\nnulling series: " + render(r.nulling_series->series());
  if (r.nulling_series) {
    text += "\nresidual order: " + (r.residual_order ? std::to_string(*r.residual_order) : std::string("exact zero"));
  }
  return text;
}

void build(CLI::App& app, Options& opts, std::ostream& out, std::function<void()>& action) {
  app.require_subcommand(1);
  app.add_option("--order", opts.order, "Truncation length for series-valued results")->capture_default_str();
  app.add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
                                          CLI::ignore_case))
      ->default_str("text");
  app.fallthrough();

  auto emit = std::make_shared<Emitter>(opts, out);
  auto binary = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("A", *a, "First series")->required();
    sub->add_option("B", *b, "Second series")->required();
    sub->callback([&, a, b, fn, emit] {
      action = [=, &opts] {
        const Series r = fn(series_arg(*a), series_arg(*b), opts.order);
        (*emit)(render(r), to_json(r));
      };
    });
  };
  auto unary = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    sub->add_option("C", *a, "Series expression, JSON document or @file")->required();
    sub->callback([&, a, fn] { action = [=, &opts] { fn(series_arg(*a), opts.order); }; });
    return sub;
  };

  binary("shuffle", "Shuffle product", [](const Series& a, const Series& b, std::size_t) { return shuffle(a, b); });
  binary("concat", "Concatenation product", [](const Series& a, const Series& b, std::size_t) { return concat(a, b); });
  binary("compose", "Composition product c o d", [](const Series& c, const Series& d, std::size_t n) {
    return compose(c, d, n);
  });
  binary("verifynull", "Residual of c composed with the jet cu", [](const Series& c, const Series& cu, std::size_t n) {
    return verify_null(c, Jet(cu), n);
  });

  unary("shinv", "Shuffle inverse", [emit](const Series& d, std::size_t n) {
    const Series r = shuffle_inverse(d, n);
    (*emit)(render(r), to_json(r));
  });
  unary("reldeg", "Relative degree", [emit](const Series& c, std::size_t) {
    const RelativeDegree rd = relative_degree(c);
    Json j;
    j["relative_degree"] = rd.defined() ? Json(*rd.r) : Json(nullptr);
    j["K"] = rd.defined() ? Json(to_string(rd.K)) : Json(nullptr);
    j["undefined_reason"] = rd.defined() ? Json(nullptr) : Json(std::string(to_string(rd.reason)));
    (*emit)(rd.defined() ? "r = " + std::to_string(*rd.r) + ", K = " + to_string(rd.K)
                         : "undefined (" + std::string(to_string(rd.reason)) + ")",
            j);
  });
  unary("classify", "Nullability verdict", [emit](const Series& c, std::size_t n) {
    const NullabilityReport r = classify(c, n);
    (*emit)(report_text(r), to_json(r));
  });
  unary("nullseries", "Nulling jet of a linearly nullable series", [emit](const Series& c, std::size_t n) {
    const Jet j = nulling_series(c, n);
    (*emit)(render(j.series()), to_json(j.series()));
  });
  unary("tolyndon", "Image under the Lyndon map", [emit](const Series& c, std::size_t) {
    const CommutativePolynomial p = to_lyndon(c);
    (*emit)(render(p), to_json(p));
  });
  unary("shufflefactor", "Unique shuffle factorization", [emit](const Series& c, std::size_t) {
    const ShuffleFactorization f = factor_shuffle(c);
    std::vector<std::pair<std::string, unsigned>> lines;
    for (const auto& factor : f.factors) lines.emplace_back(render(factor.series), factor.multiplicity);
    (*emit)(factor_lines(to_string(f.unit), lines), to_json(f));
  });
  unary("analyze", "Shuffle factorization with per-factor nullability", [emit](const Series& c, std::size_t n) {
    const NullableAnalysis a = nullable_analysis(c, n);
    std::string text = "unit: " + to_string(a.unit);
    for (const auto& fa : a.factors) {
      text += "\n\nfactor: " + render(fa.factor.series);
      if (fa.factor.multiplicity > 1) text += "\nmultiplicity: " + std::to_string(fa.factor.multiplicity);
      text += "\n" + report_text(fa.report);
    }
    (*emit)(text, to_json(a));
  });

  {
    auto* sub = app.add_subcommand("lshift", "Left shift prefix^{-1}(c)");
    auto prefix = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    sub->add_option("PREFIX", *prefix, "Word to strip")->required();
    sub->add_option("C", *c, "Series")->required();
    sub->callback([&, prefix, c, emit] {
      action = [=] {
        const Series r = left_shift(parse_word(resolve(*prefix)), series_arg(*c));
        (*emit)(render(r), to_json(r));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("cfl", "Chen-Fox-Lyndon factorization of a word");
    auto w = std::make_shared<std::string>();
    sub->add_option("WORD", *w, "Word such as x0x1x0")->required();
    sub->callback([&, w, emit] {
      action = [=] {
        const std::vector<Word> fs = cfl_factorize(parse_word(resolve(*w)));
        Json words = Json::array();
        for (const Word& f : fs) words.push_back(to_string(f));
        (*emit)(render_cfl(fs), Json{{"factors", words}});
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lyndon", "Enumerate Lyndon words");
    auto k = std::make_shared<std::size_t>(0);
    sub->add_option("--max-len", *k, "Longest word length")->required();
    sub->callback([&, k, emit] {
      action = [=] {
        const std::vector<Word> ws = lyndon_enumerate(*k);
        std::string text;
        Json words = Json::array();
        for (std::size_t i = 0; i < ws.size(); ++i) {
          text += (i ? "\n" : "") + ("l" + std::to_string(i) + " = " + to_string(ws[i]));
          words.push_back({{"index", i}, {"word", to_string(ws[i])}});
        }
        (*emit)(text, Json{{"words", words}});
      };
    });
  }
  {
    auto* sub = app.add_subcommand("fromlyndon", "Inverse of the Lyndon map");
    auto p = std::make_shared<std::string>();
    sub->add_option("P", *p, "Polynomial in l0, l1, ...")->required();
    sub->callback([&, p, emit] {
      action = [=] {
        const Series r = from_lyndon(lyndon_polynomial_arg(*p));
        (*emit)(render(r), to_json(r));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("factor", "Factor a commutative polynomial over Q");
    auto p = std::make_shared<std::string>();
    sub->add_option("P", *p, "Polynomial in l or z variables")->required();
    sub->callback([&, p, emit] {
      action = [=] {
        const std::string text = resolve(*p);
        const CommutativePolynomial poly =
            looks_like_json(text) ? commutative_from_json(parse_json(text)) : parse_commutative(text);
        const Factorization f = factor(poly);
        std::vector<std::pair<std::string, unsigned>> lines;
        for (const auto& [q, k] : f.factors) lines.emplace_back(render(q), k);
        (*emit)(factor_lines(to_string(f.unit), lines), to_json(f));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("realize", "Generating series of a polynomial realization");
    auto file = std::make_shared<std::string>();
    sub->add_option("--file", *file, "Realization JSON file")->required();
    sub->callback([&, file, emit] {
      action = [=, &opts] {
        const Series r = generating_series(realization_from_json(parse_json(read_file(*file))), opts.order);
        (*emit)(render(r), to_json(r));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("evalfliess", "Evaluate a truncated Fliess operator on a polynomial input");
    auto c = std::make_shared<std::string>();
    auto u = std::make_shared<std::string>();
    sub->add_option("C", *c, "Series")->required();
    sub->add_option("--input", *u, "Input polynomial in t")->required();
    sub->callback([&, c, u, emit] {
      action = [=, &opts] {
        const TimePolynomial y = evaluate_fliess(series_arg(*c), parse_time_polynomial(resolve(*u)), opts.order);
        Json coeffs = Json::array();
        for (const auto& k : y.coefficients()) coeffs.push_back(to_string(k));
        (*emit)(render(y), Json{{"coefficients", coeffs}});
      };
    });
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chen-Fliess series toolkit", "fliess"};
  Options opts;
  std::function<void()> action;
  build(app, opts, out, action);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fliess::cli
