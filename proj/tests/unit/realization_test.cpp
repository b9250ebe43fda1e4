#include <gtest/gtest.h>

#include "common.hpp"
#include "fliess/errors.hpp"
#include "fliess/realization.hpp"

using namespace fliess;
using testing_util::S;
using testing_util::Z;

namespace {

TimePolynomial T(const std::string& text) { return parse_time_polynomial(text); }

Realization product_system() {
  Realization sys;
  sys.n = 3;
  sys.z0 = {0, 0, 0};
  sys.g0 = {Z("1"), Z("z3"), Z("1")};
  sys.g1 = {Z("-1"), Z("-1"), Z("0")};
  sys.h = Z("z1 z2");
  return sys;
}

}  // namespace

TEST(LieDerivative, Examples) {
  EXPECT_EQ(lie_derivative(Z("z1 z2"), {Z("1"), Z("0")}), Z("z2"));
  EXPECT_EQ(lie_derivative(Z("z1"), {Z("z3"), Z("0"), Z("1")}), Z("z3"));
  EXPECT_EQ(lie_derivative(Z("z1^2"), {Z("z1")}), Z("2 z1^2"));
  EXPECT_TRUE(lie_derivative(Z("5"), {Z("z1")}).is_zero());
}

TEST(LieDerivative, DimensionMismatch) {
  EXPECT_THROW(lie_derivative(Z("z3"), {Z("1"), Z("1")}), DomainError);
  EXPECT_THROW(lie_derivative(Z("z1"), {Z("z4"), Z("1")}), DomainError);
}

TEST(GeneratingSeries, IntroSystem) {
  const Series c = generating_series(product_system(), 4);
  EXPECT_EQ(c.as_polynomial(), S("-x0 x1 - x1 x0 + 2 x1^2 + 3 x0^3 - x0^2 x1 - x0 x1 x0 - x1 x0^2"));
  EXPECT_EQ(c.as_polynomial(), shuffle(S("x0 - x1"), S("x0^2 - x1")));
  EXPECT_EQ(c, generating_series_serial(product_system(), 4));
}

TEST(GeneratingSeries, WordOrientation) {
  // dz2 = z3, dz3 = u, y = z2: y is the double integral of u, E_{x0 x1}[u].
  // The leftmost letter's field acts on h first.
  Realization sys;
  sys.n = 3;
  sys.z0 = {0, 0, 0};
  sys.g0 = {Z("0"), Z("z3"), Z("0")};
  sys.g1 = {Z("0"), Z("0"), Z("1")};
  sys.h = Z("z2");
  EXPECT_EQ(generating_series(sys, 4).as_polynomial(), S("x0 x1"));

  // Length-3 and length-2 terms of the product system.
  const Series c = generating_series(product_system(), 3);
  EXPECT_EQ(c.coefficient(Word{0, 0, 1}), -1);
  EXPECT_EQ(c.coefficient(Word{1, 0, 0}), -1);
  EXPECT_EQ(c.coefficient(Word{0, 1, 0}), -1);
  EXPECT_EQ(c.coefficient(Word{1, 1, 0}), 0);
  EXPECT_EQ(c.coefficient(Word{0, 1, 1}), 0);
  EXPECT_EQ(c.coefficient(Word{1, 1}), 2);
}

TEST(GeneratingSeries, SingleIntegratorAndConstantTerm) {
  Realization sys;
  sys.n = 1;
  sys.z0 = {0};
  sys.g0 = {Z("0")};
  sys.g1 = {Z("1")};
  sys.h = Z("z1");
  EXPECT_EQ(generating_series(sys, 6).as_polynomial(), S("x1"));
  sys.z0 = {3};
  sys.h = Z("z1^2 + 1");
  EXPECT_EQ(generating_series(sys, 4).coefficient(Word{}), 10);
}

TEST(GeneratingSeries, RejectsMalformedSystems) {
  Realization sys = product_system();
  sys.g1.pop_back();
  EXPECT_THROW(generating_series(sys, 3), DomainError);
}

TEST(IteratedIntegral, Examples) {
  EXPECT_EQ(iterated_integral(Word{0}, T("t^3 + 2")), T("t"));
  EXPECT_EQ(iterated_integral(Word{1}, T("t")), T("t^2/2"));
  EXPECT_EQ(iterated_integral(Word{0, 1}, T("1")), T("t^2/2"));
  EXPECT_EQ(iterated_integral(Word{}, T("t")), T("1"));
  EXPECT_EQ(iterated_integral(Word{1, 0}, T("2")), T("t^2"));
  EXPECT_THROW(iterated_integral(Word{2}, T("1")), DomainError);
}

TEST(EvaluateFliess, NullingInputs) {
  EXPECT_TRUE(evaluate_fliess(S("x0 - x1"), T("1"), 4).is_zero());
  EXPECT_TRUE(evaluate_fliess(S("x0^2 - x1"), T("t"), 4).is_zero());
  const Series c = S(testing_util::kProduct);
  EXPECT_FALSE(evaluate_fliess(c, T("1"), 8).is_zero());
}

TEST(EvaluateFliess, TruncatedSeries) {
  const Series c = truncate(S("x0 + x1^3"), 2);
  EXPECT_EQ(evaluate_fliess(c, T("1"), 2), T("t"));
  EXPECT_THROW(evaluate_fliess(c, T("1"), 3), TruncationError);
}

TEST(TimePolynomial, Arithmetic) {
  EXPECT_EQ(T("t") * T("t + 1"), T("t^2 + t"));
  EXPECT_EQ(T("3 t^2").integral(), T("t^3"));
  EXPECT_EQ(T("t^2/2 - 1")(Rational(2)), 1);
  EXPECT_EQ(T("0").degree(), -1);
}

TEST(Jets, ToAndFromPolynomials) {
  EXPECT_EQ(jet_to_polynomial(Jet::constant(1), 5), T("1"));
  EXPECT_EQ(jet_to_polynomial(Jet(S("x0")), 5), T("t"));
  EXPECT_EQ(jet_to_polynomial(Jet(S("-1 + x0^2")), 5), T("-1 + t^2/2"));
  EXPECT_EQ(jet_to_polynomial(Jet(S("x0 + 6 x0^3")), 2), T("t"));
  EXPECT_EQ(polynomial_to_jet(T("-1 + t^2/2")), Jet(S("-1 + x0^2")));
  EXPECT_EQ(polynomial_to_jet(T("t^3")), Jet(S("6 x0^3")));
  EXPECT_THROW(jet_to_polynomial(Jet(truncate(S("1 + x0"), 2)), 4), TruncationError);
}
