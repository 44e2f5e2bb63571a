#include "divstab/polynomial.hpp"

#include <algorithm>

namespace divstab {

static void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

RatPolynomial RatPolynomial::constant(const Rational& c) {
  return RatPolynomial(std::vector<Rational>{c});
}

Rational RatPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RatPolynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::antiderivative() const {
  std::vector<Rational> out(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i + 1));
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return RatPolynomial();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return RatPolynomial(std::move(out));
}

Rational integrate(const RatPolynomial& p, const Rational& a, const Rational& b) {
  if (a > b) throw invalid_interval_error("integrate over [a,b] with a > b");
  const RatPolynomial f = p.antiderivative();
  return f.eval(b) - f.eval(a);
}

RatPolynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                   const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw precondition_error("interpolation needs matching nonempty samples");
  RatPolynomial acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      if (xs[i] == xs[j]) throw precondition_error("interpolation nodes must be distinct");
      basis = basis * RatPolynomial({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + basis.scaled(ys[i] / denom);
  }
  return acc;
}

static std::vector<Int> divisors_up_to_budget(Int v) {
  std::vector<Int> out;
  if (v < 0) v = -v;
  if (v == 0 || v > Int(1000000000)) return out;
  const long long n = v.convert_to<long long>();
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.emplace_back(d);
      if (d != n / d) out.emplace_back(n / d);
    }
  }
  return out;
}

std::vector<Rational> rational_roots(const RatPolynomial& p) {
  std::vector<Rational> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  // primitive integer form: multiply by the lcm of coefficient denominators
  Int lcm = 1;
  for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, c.denominator());
  std::vector<Int> ic(p.coeffs().size());
  for (size_t i = 0; i < ic.size(); ++i)
    ic[i] = p.coeffs()[i].numerator() * (lcm / p.coeffs()[i].denominator());
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 >= ic.size()) return roots;
  const auto ps = divisors_up_to_budget(ic[low]);
  const auto qs = divisors_up_to_budget(ic.back());
  for (const auto& pn : ps) {
    for (const auto& qd : qs) {
      for (int s : {1, -1}) {
        const Rational cand(s > 0 ? pn : Int(-pn), qd);
        if (p.eval(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace divstab
