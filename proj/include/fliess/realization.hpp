#pragma once

#include <cstddef>
#include <vector>

#include "fliess/commutative.hpp"
#include "fliess/composition.hpp"
#include "fliess/series.hpp"

namespace fliess {

// dz/dt = g0(z) + g1(z) u, y = h(z), z(0) = z0, with state variables z1..zn.
struct Realization {
  std::size_t n = 0;
  std::vector<Rational> z0;
  std::vector<CommutativePolynomial> g0;
  std::vector<CommutativePolynomial> g1;
  CommutativePolynomial h{VariableFamily::State};

  // Throws DomainError on size mismatches or variables outside z1..zn.
  void validate() const;
};

// sum_j dh/dz_j * g[j-1]. Throws DomainError when h or g mention a state
// variable beyond g.size().
CommutativePolynomial lie_derivative(const CommutativePolynomial& h, const std::vector<CommutativePolynomial>& g);

// (c, x_{i_k} ... x_{i_1}) = L_{g_{i_1}} ... L_{g_{i_k}} h (z0) for all words
// through length n; the leftmost letter's field acts on h first.
Series generating_series(const Realization& sys, std::size_t n);
Series generating_series_serial(const Realization& sys, std::size_t n);

// Polynomial in t with rational coefficients; index k holds the t^k coefficient.
class TimePolynomial {
 public:
  TimePolynomial() = default;
  explicit TimePolynomial(std::vector<Rational> coeffs);
  static TimePolynomial constant(const Rational& c) { return TimePolynomial({c}); }
  static TimePolynomial t() { return TimePolynomial({0, 1}); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& t) const;
  // Antiderivative vanishing at 0.
  TimePolynomial integral() const;

  friend TimePolynomial operator+(const TimePolynomial& a, const TimePolynomial& b);
  friend TimePolynomial operator-(const TimePolynomial& a, const TimePolynomial& b);
  friend TimePolynomial operator*(const TimePolynomial& a, const TimePolynomial& b);
  friend TimePolynomial operator*(const Rational& alpha, const TimePolynomial& a);
  friend bool operator==(const TimePolynomial&, const TimePolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// E_eta[u](t) with u_0 = 1 and u_1 = u. Throws DomainError for letters beyond x1.
TimePolynomial iterated_integral(const Word& eta, const TimePolynomial& u);
// sum over |eta| <= n of (c, eta) E_eta[u](t). Throws TruncationError when the
// horizon of c is below n.
TimePolynomial evaluate_fliess(const Series& c, const TimePolynomial& u, std::size_t n);

// u(t) = sum_{k <= degree_cap} (c_u, x0^k) t^k / k!. Throws TruncationError
// when the jet's horizon is below degree_cap.
TimePolynomial jet_to_polynomial(const Jet& cu, std::size_t degree_cap);
Jet polynomial_to_jet(const TimePolynomial& u);

}  // namespace fliess
