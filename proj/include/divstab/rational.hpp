// Exact arbitrary-precision rational scalars and fixed-dimension rational vectors.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "divstab/errors.hpp"

namespace divstab {

using Int = boost::multiprecision::cpp_int;

// Canonical form is maintained by the backing type: denominator > 0 and
// gcd(|numerator|, denominator) = 1 after every operation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  // Accepts "p/q" or a bare integer "p"; the canonical form is produced
  // regardless of how the input was reduced.
  static Rational parse(std::string_view text);

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }
  Int floor() const;
  Int ceil() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static Rational pow(const Rational& base, int exponent);

 private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(Backing v) : v_(std::move(v)) {}
  Backing v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Int factorial(int n);
Int int_pow(const Int& base, int exponent);

// Point or functional in fixed dimension; dimension mismatch is a
// construction/usage error, never silent broadcasting.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(int dim) : coords_(static_cast<size_t>(dim)) {}
  RatVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RatVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Rational dot(const RatVector& o) const;
  RatVector operator+(const RatVector& o) const;
  RatVector operator-(const RatVector& o) const;
  RatVector scaled(const Rational& c) const;
  bool is_zero() const;

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.coords_ == b.coords_;
  }

  std::string str() const;  // "a,b,c" with canonical rational components

 private:
  std::vector<Rational> coords_;
};

bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace divstab
