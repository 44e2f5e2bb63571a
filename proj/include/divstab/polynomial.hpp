// Univariate polynomials with exact rational coefficients.
#pragma once

#include <vector>

#include "divstab/rational.hpp"

namespace divstab {

// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed so the zero
// polynomial is the empty list.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  static RatPolynomial constant(const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  Rational eval(const Rational& x) const;
  RatPolynomial derivative() const;
  RatPolynomial antiderivative() const;  // constant term 0

  RatPolynomial operator+(const RatPolynomial& o) const;
  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  RatPolynomial scaled(const Rational& c) const;
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// Exact definite integral; throws invalid_interval_error when a > b.
Rational integrate(const RatPolynomial& p, const Rational& a, const Rational& b);

// Unique polynomial of degree < points.size() through the given points.
RatPolynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                   const std::vector<Rational>& ys);

// All rational roots, found by the rational root theorem on the primitive
// integer form. Divisor enumeration bails out (returning what it has) when a
// bound coefficient exceeds the trial-division budget.
std::vector<Rational> rational_roots(const RatPolynomial& p);

}  // namespace divstab
