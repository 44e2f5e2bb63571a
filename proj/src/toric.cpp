#include "divstab/toric.hpp"

#include <algorithm>
#include <numeric>

namespace divstab {

void validate_fan(const ToricFano& fan) {
  if (fan.dim < 1 || fan.dim > 4)
    throw precondition_error("fan dimension must be between 1 and 4");
  if (fan.rays.empty()) throw precondition_error("fan has no rays");
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    if (static_cast<int>(r.size()) != fan.dim)
      throw precondition_error("ray dimension mismatch");
    long long g = 0;
    for (long long c : r) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw precondition_error("zero ray");
    if (g != 1) throw precondition_error("ray is not primitive");
    for (size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[j] == r) throw precondition_error("repeated ray");
  }
}

RatVector ray_vector(const ToricFano& fan, int ray) {
  if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
    throw precondition_error("ray index out of range");
  RatVector v(fan.dim);
  for (int i = 0; i < fan.dim; ++i)
    v[i] = Rational(fan.rays[static_cast<size_t>(ray)][static_cast<size_t>(i)]);
  return v;
}

Polytope build_anticanonical_polytope(const ToricFano& fan) {
  validate_fan(fan);
  std::vector<HalfSpace> hs;
  hs.reserve(fan.rays.size());
  for (size_t i = 0; i < fan.rays.size(); ++i)
    hs.emplace_back(ray_vector(fan, static_cast<int>(i)), Rational(-1));
  try {
    return Polytope::from_halfspaces(std::move(hs), fan.dim);
  } catch (const unbounded_error&) {
    throw not_fano_error("rays do not define a Q-Fano variety: polytope is unbounded");
  }
}

Rational pseudoeffective_threshold(const Polytope& p, const RatVector& ray) {
  Rational best;
  bool first = true;
  for (const auto& u : p.vertices()) {
    const Rational v = ray.dot(u);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  if (first) throw zero_volume_error("threshold of an empty polytope");
  return best + Rational(1);
}

Rational pseudoeffective_threshold(const ToricFano& fan, int ray) {
  return pseudoeffective_threshold(build_anticanonical_polytope(fan), ray_vector(fan, ray));
}

Rational toric_volume_at(const Polytope& p, const RatVector& ray, const Rational& x) {
  if (x.sign() < 0) throw precondition_error("slice parameter must be nonnegative");
  const Polytope sliced = halfspace_slice(p, HalfSpace(ray, Rational(-1) + x));
  return volume(sliced) * Rational(factorial(p.dim()));
}

Rational toric_volume_at(const ToricFano& fan, int ray, const Rational& x) {
  return toric_volume_at(build_anticanonical_polytope(fan), ray_vector(fan, ray), x);
}

Rational toric_eta(const Polytope& p, const RatVector& ray) {
  return -(moment(p, ray) * Rational(factorial(p.dim())));
}

Rational toric_eta(const ToricFano& fan, int ray) {
  return toric_eta(build_anticanonical_polytope(fan), ray_vector(fan, ray));
}

ToricStabilityReport semistability_verdict(const ToricFano& fan) {
  const Polytope p = build_anticanonical_polytope(fan);
  ToricStabilityReport report;
  report.volume = volume(p);
  report.barycenter = barycenter(p);
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const RatVector v = ray_vector(fan, static_cast<int>(i));
    report.per_ray.push_back(
        {static_cast<int>(i), pseudoeffective_threshold(p, v), toric_eta(p, v)});
  }
  if (report.barycenter.is_zero()) {
    report.verdict = ToricVerdict::SemistableNotStable;
  } else {
    report.verdict = ToricVerdict::NotSemistable;
    int best = -1;
    Rational best_pairing;
    for (size_t i = 0; i < fan.rays.size(); ++i) {
      const Rational pairing = report.barycenter.dot(ray_vector(fan, static_cast<int>(i)));
      if (best < 0 || pairing > best_pairing) {
        best = static_cast<int>(i);
        best_pairing = pairing;
      }
    }
    report.witness_ray = best;
  }
  return report;
}

OkounkovReport okounkov_barycenter_verdict(const Polytope& body) {
  OkounkovReport report;
  report.barycenter = barycenter(body);  // throws zero_volume_error if degenerate
  report.b1 = report.barycenter[0];
  if (report.b1 < Rational(1))
    report.obstruction = OkounkovObstruction::ConsistentWithKStable;
  else if (report.b1 == Rational(1))
    report.obstruction = OkounkovObstruction::ConsistentWithKSemistableOnly;
  else
    report.obstruction = OkounkovObstruction::ObstructsKSemistability;
  return report;
}

const char* to_string(ToricVerdict v) {
  switch (v) {
    case ToricVerdict::NotSemistable:
      return "NotSemistable";
    case ToricVerdict::SemistableNotStable:
      return "SemistableNotStable";
  }
  return "?";
}

const char* to_string(OkounkovObstruction o) {
  switch (o) {
    case OkounkovObstruction::ConsistentWithKStable:
      return "ConsistentWithKStable";
    case OkounkovObstruction::ConsistentWithKSemistableOnly:
      return "ConsistentWithKSemistableOnly";
    case OkounkovObstruction::ObstructsKSemistability:
      return "ObstructsKSemistability";
  }
  return "?";
}

PiecewisePolynomial slice_volume_profile(const ToricFano& fan, int ray) {
  const Polytope p = build_anticanonical_polytope(fan);
  const RatVector v = ray_vector(fan, ray);
  const Rational tau = pseudoeffective_threshold(p, v);
  std::vector<Rational> breaks{Rational(0), tau};
  for (const auto& u : p.vertices()) {
    const Rational level = v.dot(u) + Rational(1);
    if (level > Rational(0) && level < tau) breaks.push_back(level);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  PiecewisePolynomial out;
  out.breakpoints = breaks;
  const int n = fan.dim;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational lo = breaks[i], hi = breaks[i + 1];
    // degree <= n between vertex levels: interpolate on n+1 interior nodes
    // and confirm on one more
    std::vector<Rational> xs, ys;
    const Rational step = (hi - lo) / Rational(n + 3);
    for (int j = 1; j <= n + 2; ++j) {
      const Rational x = lo + step * Rational(j);
      xs.push_back(x);
      ys.push_back(toric_volume_at(p, v, x));
    }
    std::vector<Rational> fit_x(xs.begin(), xs.begin() + n + 1);
    std::vector<Rational> fit_y(ys.begin(), ys.begin() + n + 1);
    const RatPolynomial piece = lagrange_interpolate(fit_x, fit_y);
    if (piece.eval(xs.back()) != ys.back())
      throw error("slice volume is not polynomial between vertex levels");
    out.pieces.push_back(piece);
  }
  return out;
}

}  // namespace divstab
