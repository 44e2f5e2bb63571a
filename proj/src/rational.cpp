#include "divstab/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace divstab {

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw error("rational with zero denominator");
  if (den < 0)
    v_ = Backing(Int(-num), Int(-den));
  else
    v_ = Backing(num, den);
}

static bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = Int(std::string(s));
  return true;
}

Rational Rational::parse(std::string_view text) {
  const size_t slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num))
      throw parse_error("bad rational literal: '" + std::string(text) + "'");
  } else {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
      throw parse_error("bad rational literal: '" + std::string(text) + "'");
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Int Rational::floor() const {
  Int q = numerator() / denominator();
  if (numerator() < 0 && q * denominator() != numerator()) --q;
  return q;
}

Int Rational::ceil() const {
  Int q = numerator() / denominator();
  if (numerator() > 0 && q * denominator() != numerator()) ++q;
  return q;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << numerator();
  if (denominator() != 1) os << '/' << denominator();
  return os.str();
}

Rational Rational::operator-() const { return Rational(Backing(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw error("zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational acc(1), b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int factorial(int n) {
  Int acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Int int_pow(const Int& base, int exponent) {
  Int acc = 1, b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  return acc;
}

Rational RatVector::dot(const RatVector& o) const {
  if (dim() != o.dim()) throw dimension_error("dot of vectors of different dimension");
  Rational acc;
  for (int i = 0; i < dim(); ++i) acc += coords_[i] * o.coords_[i];
  return acc;
}

RatVector RatVector::operator+(const RatVector& o) const {
  if (dim() != o.dim()) throw dimension_error("sum of vectors of different dimension");
  RatVector out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = coords_[i] + o.coords_[i];
  return out;
}

RatVector RatVector::operator-(const RatVector& o) const {
  if (dim() != o.dim()) throw dimension_error("difference of vectors of different dimension");
  RatVector out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = coords_[i] - o.coords_[i];
  return out;
}

RatVector RatVector::scaled(const Rational& c) const {
  RatVector out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = coords_[i] * c;
  return out;
}

bool RatVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::string RatVector::str() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  const int d = std::min(a.dim(), b.dim());
  for (int i = 0; i < d; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.dim() < b.dim();
}

}  // namespace divstab
