// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fliess/composition.hpp"
#include "fliess/format.hpp"
#include "fliess/lyndon_iso.hpp"
#include "fliess/nullability.hpp"
#include "fliess/parse.hpp"
#include "fliess/polyfactor.hpp"
#include "fliess/realization.hpp"
#include "fliess/shuffle_factor.hpp"
#include "oracles.hpp"
#include "suites.hpp"

using namespace fliess;

namespace {

const char* const kFactor1 = "x0 + x1 + x0 x1 x0";
const char* const kFactor2 = "x0 - x1 + x1 x0 x1";
const char* const kListing =
    "2 x0^2 - 2 x1^2 + 2 x0^2 x1 x0 + 2 x0 x1 x0^2 - 2 x0 x1^2 x0"
    " + 2 x1 x0^2 x1 + 2 x1 x0 x1^2 + 2 x1^2 x0 x1 + 2 x0 x1 x0 x1 x0 x1"
    " + 2 x0 x1 x0 x1^2 x0 + 4 x0 x1^2 x0^2 x1 + 2 x0 x1^2 x0 x1 x0"
    " + 2 x1 x0^2 x1 x0 x1 + 4 x1 x0^2 x1^2 x0 + 2 x1 x0 x1 x0^2 x1"
    " + 2 x1 x0 x1 x0 x1 x0";
const char* const kListingLyndon =
    "l0^2 - l1^2 + l0^2 l2 + l1^2 l2 + l0 l1 l2^2 - 2 l0 l3"
    " + 2 l1 l3 - 2 l1 l2 l3 - 2 l0 l4 - 2 l1 l4 - 2 l0 l2 l4 + 4 l3 l4";

Series S(const std::string& text) { return parse_series(text); }
CommutativePolynomial P(const std::string& text) { return parse_commutative(text); }

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

bool report(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = check.failures().empty();
  std::printf("criterion %d: %s  %s (%.2f s)\n", number, ok ? "PASS" : "FAIL", title.c_str(), seconds);
  for (const auto& n : check.notes()) std::printf("    %s\n", n.c_str());
  for (const auto& f : check.failures()) std::printf("    failed: %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

Realization product_system() {
  Realization sys;
  sys.n = 3;
  sys.z0 = {0, 0, 0};
  auto z = [](const char* t) { return parse_commutative(t, VariableFamily::State); };
  sys.g0 = {z("1"), z("z3"), z("1")};
  sys.g1 = {z("-1"), z("-1"), z("0")};
  sys.h = z("z1 z2");
  return sys;
}

void two_factor_product(Check& check) {
  const Series c = shuffle(S(kFactor1), S(kFactor2));
  const Series listing = S(kListing);
  check.expect(c == listing, "product differs from the listing: " + render(c));
  check.expect(c == oracle::shuffle(S(kFactor1), S(kFactor2)), "product differs from the brute-force shuffle");
  check.note("product has " + std::to_string(c.size()) + " terms");

  const auto start = std::chrono::steady_clock::now();
  const ShuffleFactorization f = factor_shuffle(listing);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.note("shufflefactor took " + std::to_string(seconds) + " s");
  check.expect(seconds < 10, "shufflefactor took longer than 10 s");
  check.expect(f.unit == 1, "unit is " + to_string(f.unit));
  std::multiset<std::string> got;
  for (const auto& g : f.factors) {
    check.expect(g.multiplicity == 1, "factor with multiplicity " + std::to_string(g.multiplicity));
    got.insert(render(g.series));
  }
  const std::multiset<std::string> want{render(S(kFactor1)), render(S(kFactor2))};
  check.expect(got == want, "factors differ from the expected pair");
  check.expect(expand(f) == listing, "factors do not multiply back to the input");
}

void lyndon_goldens(Check& check) {
  const std::pair<const char*, const char*> goldens[] = {
      {"x0 x1 x0", "l0 l2 - 2 l3"},
      {"x0^2 x1 x0", "l0 l3 - 3 l5"},
      {"x0 x1 x0^2", "1/2 l0^2 l2 - 2 l0 l3 + 3 l5"},
  };
  for (const auto& [word, image] : goldens) {
    const CommutativePolynomial got = to_lyndon(S(word));
    check.expect(got == P(image), std::string(word) + " maps to " + render(got));
  }
  const CommutativePolynomial cl = to_lyndon(S(kListing));
  check.expect(cl == P(kListingLyndon), "image of the product is " + render(cl));
  check.note("image of the product has " + std::to_string(cl.size()) + " terms");
}

void nulling_series_checks(Check& check) {
  const Series c = S(kListing);
  const NullableAnalysis a = nullable_analysis(c, 8);
  check.expect(a.factors.size() == 2, "expected two factors");
  const std::set<std::string> want{render(S("1 + x0^2 + 7 x0^4 + 127 x0^6 + 4369 x0^8")),
                                   render(S("-1 + x0^2 - 3 x0^4 + 15 x0^6 - 105 x0^8"))};
  std::set<std::string> got;
  std::set<std::string> leading;
  for (const FactorAnalysis& fa : a.factors) {
    if (!fa.report.nulling_series) {
      check.expect(false, "factor " + render(fa.factor.series) + " has no nulling series");
      continue;
    }
    const Series jet = truncate(fa.report.nulling_series->series(), 8).as_polynomial();
    got.insert(render(jet));

    const Series residual = verify_null(c, Jet(jet), 9);
    check.expect(equal_through(residual, Series(), 9), "residual of " + render(jet) + " is nonzero through 9");

    const Series short_jet = truncate(jet, 6).as_polynomial();
    const Series r6 = verify_null(c, Jet(short_jet), 16);
    const std::size_t ord = order(r6);
    check.expect(ord >= 10 && ord != kInfiniteOrder, "residual of the length-6 jet has order " + std::to_string(ord));
    if (ord != kInfiniteOrder) {
      const Rational lead = r6.coefficient(Word::power(0, ord));
      leading.insert(to_string(lead));
      check.note("factor " + render(fa.factor.series) + ": jet " + render(jet) + ", length-6 residual leads with " +
                 to_string(lead) + " x0^" + std::to_string(ord));
    }
  }
  check.expect(got == want, "jets differ from the expected set");
  check.expect(leading == std::set<std::string>{"87380", "2100"}, "leading residual coefficients differ");
}

void small_goldens(Check& check) {
  check.expect(compose(S("x0^2 - x1 x0"), S("1"), 10).is_zero(), "(x0^2 - x1 x0) o 1 != 0");
  check.expect(compose(S("x0 + x1"), S("-1"), 10).is_zero(), "(x0 + x1) o -1 != 0");
  check.expect(compose(S("x0^2 - x1"), S("x0"), 10).is_zero(), "(x0^2 - x1) o x0 != 0");
  const RelativeDegree rd = relative_degree(S("x0 + x0 x1"));
  check.expect(rd.defined() && *rd.r == 2, "relative degree of x0 + x0 x1 is not 2");
  check.expect(classify(S("x0 + x0 x1")).verdict == Verdict::NotNullable, "x0 + x0 x1 not NotNullable");
  check.expect(classify(S("1 + x1")).verdict == Verdict::NotProper, "1 + x1 not NotProper");
  check.expect(is_irreducible(P("l1^3 - l0^2 l1 - l0^4")), "l1^3 - l0^2 l1 - l0^4 reported reducible");
}

void property_suites(Check& check) {
  const char* const names[] = {
      "compose_morphism",       "compose_quotient", "compose_left_shift",
      "lyndon_multiplicative",  "lyndon_round_trip", "cfl_bruteforce",
      "factor_refactorization", "shuffle_refactorization", "shuffle_of_linearly_nullables",
  };
  for (const char* name : names) {
    const suites::Suite& s = suites::find(name);
    const suites::Result r = s.run(s.seed, s.cases);
    check.note(suites::summary(r));
    check.expect(r.ok(), std::string(name) + ": " + r.first_failure);
    check.expect(r.cases >= 200, std::string(name) + " ran fewer than 200 cases");
    check.expect(r.seconds < 60, std::string(name) + " took longer than 60 s");
  }
}

void realization_loop(Check& check) {
  const Series c = generating_series(product_system(), 4).as_polynomial();
  const Series want = shuffle(S("x0 - x1"), S("x0^2 - x1"));
  check.expect(c == want, "generating series is " + render(c));
  const TimePolynomial y1 = evaluate_fliess(c, parse_time_polynomial("1"), 4);
  const TimePolynomial yt = evaluate_fliess(c, parse_time_polynomial("t"), 4);
  check.expect(y1.is_zero(), "output at u = 1 is " + render(y1));
  check.expect(yt.is_zero(), "output at u = t is " + render(yt));
}

void prefix_property(Check& check) {
  const suites::Suite& s = suites::find("prefix_property");
  const suites::Result r = s.run(s.seed, 100);
  check.note(suites::summary(r));
  check.expect(r.ok() && r.cases == 100, r.first_failure);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "shuffle factorization of the two-factor product", two_factor_product);
  ok &= report(2, "Lyndon map golden values", lyndon_goldens);
  ok &= report(3, "nulling series of both factors", nulling_series_checks);
  ok &= report(4, "small golden examples", small_goldens);
  ok &= report(5, "randomized property suites", property_suites);
  ok &= report(6, "realization loop", realization_loop);
  ok &= report(7, "prefix property on 100 random cases", prefix_property);
  std::printf("%s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
