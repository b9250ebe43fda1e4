#include <gtest/gtest.h>

#include "common.hpp"
#include "fliess/errors.hpp"
#include "fliess/lyndon.hpp"

using namespace fliess;
using testing_util::P;
using testing_util::S;

namespace {

Series build(std::initializer_list<std::pair<Word, Rational>> terms, Horizon h = std::nullopt) {
  Series::Terms t;
  for (const auto& [w, c] : terms) t[w] = c;
  return Series(std::move(t), h);
}

}  // namespace

TEST(ParseSeries, Examples) {
  EXPECT_EQ(S("x0^2 - x1 x0"), build({{Word{0, 0}, 1}, {Word{1, 0}, -1}}));
  EXPECT_EQ(S("1 + x1"), build({{Word{}, 1}, {Word{1}, 1}}));
  EXPECT_EQ(S("2/3 (x0 x1)^2"), build({{Word{0, 1, 0, 1}, Rational(2, 3)}}));
  EXPECT_EQ(S("x0x1x0"), build({{Word{0, 1, 0}, 1}}));
  EXPECT_EQ(S("x0 * x1 - x0/2"), build({{Word{0, 1}, 1}, {Word{0}, Rational(-1, 2)}}));
  EXPECT_EQ(S("(x0 + x1) x0"), S("x0^2 + x1 x0"));
  EXPECT_EQ(S("-x0 + x0"), Series());
  EXPECT_EQ(S(" x0 \n + \t x1 "), S("x0 + x1"));
}

TEST(ParseSeries, Horizon) {
  const Series c = S("x0 - x1^2 + O(4)");
  ASSERT_TRUE(c.horizon().has_value());
  EXPECT_EQ(*c.horizon(), 3u);
}

TEST(ParseSeries, Errors) {
  EXPECT_THROW(S("x0 +"), ParseError);
  EXPECT_THROW(S("x2"), ParseError);
  EXPECT_THROW(S("x0 ^"), ParseError);
  EXPECT_THROW(S("(x0"), ParseError);
  EXPECT_THROW(S("x0 $ x1"), ParseError);
  EXPECT_THROW(S("1/0"), ParseError);
  try {
    S("x0 +\n  x1 ? x0");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(ParseSeries, LargerAlphabet) {
  EXPECT_EQ(parse_series("x2 x0", 3).coefficient(Word{2, 0}), 1);
  EXPECT_EQ(parse_word("x0^2 x1"), (Word{0, 0, 1}));
  EXPECT_EQ(parse_word("x0x1x0"), (Word{0, 1, 0}));
  EXPECT_EQ(parse_word("1"), Word{});
}

TEST(ParseCommutative, Examples) {
  const CommutativePolynomial p = P("l1^3 - l0^2 l1 - l0^4");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.total_degree(), 4u);
  EXPECT_EQ(p.coefficient(Monomial({{0, 2}, {1, 1}})), -1);
  const CommutativePolynomial q = P("l0 l2 - 2 l3");
  EXPECT_EQ(q.coefficient(Monomial({{0, 1}, {2, 1}})), 1);
  EXPECT_EQ(q.coefficient(Monomial::variable(3)), -2);
  EXPECT_TRUE(P("1").is_constant());
  EXPECT_EQ(P("(l0 + l1)^2"), P("l0^2 + 2 l0 l1 + l1^2"));
  EXPECT_EQ(P("l0*l1"), P("l1 l0"));
}

TEST(ParseCommutative, Families) {
  EXPECT_EQ(testing_util::Z("z1 z2").family(), VariableFamily::State);
  EXPECT_EQ(P("l3").family(), VariableFamily::Lyndon);
  EXPECT_THROW(P("l0 + z1"), ParseError);
  EXPECT_THROW(P("x0"), ParseError);
}

TEST(ParseTime, Examples) {
  EXPECT_EQ(parse_time_polynomial("t^2/2 - 1").coefficients(), (std::vector<Rational>{-1, 0, Rational(1, 2)}));
  EXPECT_TRUE(parse_time_polynomial("t - t").is_zero());
  EXPECT_THROW(parse_time_polynomial("s"), ParseError);
}

TEST(Render, Series) {
  EXPECT_EQ(render(S("x1 x0 - 2 x0^2 x1 + 1/2")), "1/2 + x1 x0 - 2 x0^2 x1");
  EXPECT_EQ(render(Series()), "0");
  EXPECT_EQ(render(truncate(S("x0 - x1^2"), 10)), "x0 - x1^2 + O(11)");
  EXPECT_EQ(render(S("-x0")), "-x0");
  EXPECT_EQ(render_word(Word{0, 0, 1, 0}), "x0^2 x1 x0");
  EXPECT_EQ(render_cfl(cfl_factorize(Word{0, 1, 0})), "(x0x1)(x0)");
}

TEST(Render, Polynomials) {
  EXPECT_EQ(render(P("-2 l3 + l0 l2")), "l0 l2 - 2 l3");
  EXPECT_EQ(render(P("l1^3 - l0^2 l1 - l0^4")), "-l0^4 - l0^2 l1 + l1^3");
  EXPECT_EQ(render(parse_time_polynomial("-1 + t^2/2")), "t^2/2 - 1");
}

TEST(Render, RoundTrip) {
  for (const char* text : {"x0 - 3/4 x1 x0^2 + 7", "x0 x1^3 x0 + O(6)", "0", "-x1"}) {
    const Series c = S(text);
    EXPECT_EQ(S(render(c)), c) << text;
  }
  const CommutativePolynomial p = P("3/2 l0^2 l5 - l1 + 4");
  EXPECT_EQ(P(render(p)), p);
}

TEST(Json, SeriesSchema) {
  const Json j = to_json(S("x0 x1 - 1/2"));
  EXPECT_TRUE(j.at("horizon").is_null());
  ASSERT_EQ(j.at("terms").size(), 2u);
  EXPECT_EQ(j.at("terms")[0].at("coeff"), "-1/2");
  EXPECT_EQ(j.at("terms")[0].at("word"), Json::array());
  EXPECT_EQ(j.at("terms")[1].at("word"), Json::array({0, 1}));
  EXPECT_EQ(to_json(truncate(S("x0"), 4)).at("horizon"), 4);
}

TEST(Json, SeriesRoundTrip) {
  for (const Series& c : {S("x0 x1 - 1/2 + 3 x1^3"), truncate(S("x0 + x1^4"), 3), Series()}) {
    EXPECT_EQ(series_from_json(to_json(c)), c);
  }
  EXPECT_EQ(series_from_json(Json::parse(R"({"terms":[{"coeff":"2","word":"x0x1"}]})")), S("2 x0 x1"));
  EXPECT_THROW(series_from_json(Json::parse(R"({"terms":[{"coeff":"2"}]})")), ParseError);
  EXPECT_THROW(series_from_json(Json::parse(R"({"terms":[{"coeff":"a","word":[0]}]})")), Error);
}

TEST(Json, PolynomialSchema) {
  const Json j = to_json(P("l0^2 l2 - 3"));
  EXPECT_EQ(commutative_from_json(j), P("l0^2 l2 - 3"));
  const Json k = Json::parse(R"({"terms":[{"coeff":"1/2","monomial":{"0":2,"2":1}}]})");
  EXPECT_EQ(commutative_from_json(k), P("1/2 l0^2 l2"));
  EXPECT_THROW(commutative_from_json(Json::parse(R"({"terms":[{"coeff":"1","monomial":{"a":1}}]})")), ParseError);
}

TEST(Json, Realization) {
  const Json doc = Json::parse(R"({
    "n": 3, "z0": ["0", "0", "0"],
    "g0": [["1"], "z3", {"terms":[{"coeff":"1","monomial":{}}]}],
    "g1": ["-1", ["-1"], "0"],
    "h": {"terms":[{"coeff":"1","monomial":{"1":1,"2":1}}]}
  })");
  const Realization sys = realization_from_json(doc);
  EXPECT_EQ(sys.n, 3u);
  EXPECT_EQ(generating_series(sys, 4).as_polynomial(), shuffle(S("x0 - x1"), S("x0^2 - x1")));
  EXPECT_THROW(realization_from_json(Json::parse(R"({"n":1,"z0":["0"],"g0":["z2"],"g1":["1"],"h":"z1"})")),
               DomainError);
  EXPECT_THROW(realization_from_json(Json::parse(R"({"n":1})")), ParseError);
}

TEST(Json, Reports) {
  const Json r = to_json(classify(S("x0 + x1"), 6));
  EXPECT_EQ(r.at("verdict"), "LinearlyNullable");
  EXPECT_EQ(r.at("relative_degree"), 1);
  EXPECT_EQ(r.at("K"), "1");
  EXPECT_TRUE(r.at("residual_order").is_null());
  EXPECT_EQ(series_from_json(r.at("nulling_series")).as_polynomial(), S("-1"));
  const Json n = to_json(classify(S("x0^2 - x1 x0")));
  EXPECT_TRUE(n.at("relative_degree").is_null());
  EXPECT_TRUE(n.at("nulling_series").is_null());

  const Json a = to_json(nullable_analysis(S("x0 + x1"), 4));
  EXPECT_EQ(a.at("unit"), "1");
  ASSERT_EQ(a.at("factors").size(), 1u);
  EXPECT_EQ(a.at("factors")[0].at("multiplicity"), 1);
  EXPECT_EQ(series_from_json(a.at("factors")[0].at("series")), S("x0 + x1"));
  EXPECT_EQ(a.at("factors")[0].at("report").at("verdict"), "LinearlyNullable");
}
