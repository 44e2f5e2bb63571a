#include "divstab/weights.hpp"

#include <algorithm>
#include <functional>

namespace divstab {

namespace {

struct LatticeBox {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

// Integer bounding box of k * P from the scaled vertex coordinates.
LatticeBox bounding_box(const Polytope& p, long long k) {
  const int n = p.dim();
  LatticeBox box{std::vector<long long>(static_cast<size_t>(n)),
                 std::vector<long long>(static_cast<size_t>(n))};
  for (int i = 0; i < n; ++i) {
    Rational lo, hi;
    bool first = true;
    for (const auto& v : p.vertices()) {
      if (first || v[i] < lo) lo = v[i];
      if (first || v[i] > hi) hi = v[i];
      first = false;
    }
    box.lo[static_cast<size_t>(i)] = (lo * Rational(k)).floor().convert_to<long long>();
    box.hi[static_cast<size_t>(i)] = (hi * Rational(k)).ceil().convert_to<long long>();
  }
  return box;
}

// Applies fn to every lattice point u of k*P. Membership is pure integer
// arithmetic: <u, v_ray> >= -k for every ray.
void for_each_lattice_point(const ToricFano& fan, const Polytope& p, long long k,
                            const std::function<void(const std::vector<long long>&)>& fn) {
  const int n = fan.dim;
  const LatticeBox box = bounding_box(p, k);
  std::vector<long long> u(static_cast<size_t>(n));
  std::function<void(int)> walk = [&](int coord) {
    if (coord == n) {
      for (const auto& ray : fan.rays) {
        long long dot = 0;
        for (int i = 0; i < n; ++i) dot += ray[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
        if (dot < -k) return;
      }
      fn(u);
      return;
    }
    for (long long c = box.lo[static_cast<size_t>(coord)]; c <= box.hi[static_cast<size_t>(coord)]; ++c) {
      u[static_cast<size_t>(coord)] = c;
      walk(coord + 1);
    }
  };
  walk(0);
}

long long ray_pairing(const ToricFano& fan, int ray, const std::vector<long long>& u) {
  long long dot = 0;
  for (size_t i = 0; i < u.size(); ++i)
    dot += fan.rays[static_cast<size_t>(ray)][i] * u[i];
  return dot;
}

}  // namespace

Int section_count(const ToricFano& fan, long long k) {
  if (k < 1) throw precondition_error("section_count needs k >= 1");
  const Polytope p = build_anticanonical_polytope(fan);
  Int count = 0;
  for_each_lattice_point(fan, p, k, [&](const std::vector<long long>&) { ++count; });
  return count;
}

Int graded_section_count(const ToricFano& fan, int ray, long long r, long long k, long long j) {
  if (k < 1 || r < 1) throw precondition_error("graded_section_count needs k, r >= 1");
  if (j < 0) throw precondition_error("graded_section_count needs j >= 0");
  if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
    throw precondition_error("ray index out of range");
  const Polytope p = build_anticanonical_polytope(fan);
  const long long kr = k * r;
  Int count = 0;
  for_each_lattice_point(fan, p, kr, [&](const std::vector<long long>& u) {
    if (ray_pairing(fan, ray, u) >= -kr + j) ++count;
  });
  return count;
}

long long default_step(const ToricFano& fan, int ray, int r) {
  const Polytope p = build_anticanonical_polytope(fan);
  Int lattice_multiple = 1;
  for (const auto& v : p.vertices())
    for (int i = 0; i < p.dim(); ++i)
      lattice_multiple = boost::multiprecision::lcm(lattice_multiple, v[i].denominator());
  const Rational tau = pseudoeffective_threshold(p, ray_vector(fan, ray));
  const Int step = lattice_multiple * r * tau.denominator();
  return step.convert_to<long long>();
}

WeightSeries weight_series(const ToricFano& fan, int ray, int r, std::vector<long long> ks) {
  validate_fan(fan);
  if (r < 1) throw precondition_error("weight_series needs r >= 1");
  const int n = fan.dim;
  if (static_cast<int>(ks.size()) < n + 3)
    throw precondition_error("weight_series needs at least n+3 sample multipliers");
  const Polytope p = build_anticanonical_polytope(fan);
  const RatVector v = ray_vector(fan, ray);
  const Rational tau = pseudoeffective_threshold(p, v);

  WeightSeries series;
  series.n = n;
  series.ray = ray;
  series.r = r;
  series.tau = tau;
  series.ks = std::move(ks);

  for (long long k : series.ks) {
    if (k < 1) throw precondition_error("sample multipliers must be positive");
    const Rational kr_tau = Rational(k) * Rational(r) * tau;
    if (!kr_tau.is_integer())
      throw precondition_error("k*r*tau(D) must be integral; adjust the sampling stride");
    const long long kr = k * r;
    // f(k) = sum over u in krP of (<u, v> + kr): each u contributes one
    // section to every j with 1 <= j <= <u,v> + kr
    Int count = 0, fsum = 0;
    for_each_lattice_point(fan, p, kr, [&](const std::vector<long long>& u) {
      ++count;
      fsum += ray_pairing(fan, ray, u) + kr;
    });
    series.f_values.push_back(fsum);
    series.w_values.push_back(-kr_tau.numerator() * count + fsum);
  }

  auto fit = [&](const std::vector<Int>& values, const char* what) {
    std::vector<Rational> xs, ys;
    for (int i = 0; i < n + 2; ++i) {
      xs.emplace_back(Int(series.ks[static_cast<size_t>(i)]));
      ys.emplace_back(values[static_cast<size_t>(i)]);
    }
    const RatPolynomial fitted = lagrange_interpolate(xs, ys);
    for (size_t i = 0; i < series.ks.size(); ++i) {
      if (fitted.eval(Rational(Int(series.ks[i]))) != Rational(values[i]))
        throw fit_error(std::string(what) +
                            " series is not a degree-(n+1) polynomial on these samples; "
                            "the quasi-polynomial period was not divided out",
                        2 * series.ks[0]);
    }
    return fitted;
  };
  series.fitted_f = fit(series.f_values, "f");
  series.fitted_w = fit(series.w_values, "w");
  return series;
}

WeightSeries weight_series(const ToricFano& fan, int ray, int r) {
  const long long step = default_step(fan, ray, r);
  std::vector<long long> ks;
  for (int i = 1; i <= fan.dim + 3; ++i) ks.push_back(step * i);
  return weight_series(fan, ray, r, std::move(ks));
}

Rational eta_from_weights(const WeightSeries& series) {
  const int n = series.n;
  const Rational f_top = series.fitted_f.coeff(n + 1);
  const Rational f_sub = series.fitted_f.coeff(n);
  return Rational(factorial(n)) / Rational(int_pow(Int(series.r), n + 1)) *
         (Rational(n) * f_top - Rational(2 * series.r) * f_sub);
}

Rational df_from_weights(const WeightSeries& series, const Rational& Kn) {
  if (Kn.sign() <= 0) throw constraint_error("anticanonical degree must be positive");
  const int n = series.n;
  const Rational w_top = series.fitted_w.coeff(n + 1);
  const Rational w_sub = series.fitted_w.coeff(n);
  return Rational(int_pow(Int(series.r), n)) * Kn / Rational(factorial(n)) *
         (Rational(n, 2LL * series.r) * w_top - w_sub);
}

}  // namespace divstab
