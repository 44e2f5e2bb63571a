// Toric Q-Fano varieties from fan rays: anticanonical polytope, pseudo-effective
// thresholds, the eta invariant per torus-invariant divisor, and the stability
// verdict driven by the barycenter sign rule. Also the Okounkov-body barycenter
// test for K-stability obstructions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divstab/polynomial.hpp"
#include "divstab/polytope.hpp"

namespace divstab {

struct ToricFano {
  int dim = 0;
  std::vector<std::vector<long long>> rays;  // primitive, nonzero, pairwise distinct
  std::string name;
};

// Throws precondition_error when a ray is zero, non-primitive or repeated.
void validate_fan(const ToricFano& fan);

RatVector ray_vector(const ToricFano& fan, int ray);

// P = { u : <u, v_ray> >= -1 for every ray }, half-spaces in ray order.
// Throws not_fano_error when P is unbounded.
Polytope build_anticanonical_polytope(const ToricFano& fan);

// tau(D_ray) = 1 + max over vertices of <u, v_ray>.
Rational pseudoeffective_threshold(const ToricFano& fan, int ray);
Rational pseudoeffective_threshold(const Polytope& p, const RatVector& ray);

// n! * vol(P ∩ { <u, v_ray> >= -1 + x }); equals vol(-K_X) at x = 0.
Rational toric_volume_at(const ToricFano& fan, int ray, const Rational& x);
Rational toric_volume_at(const Polytope& p, const RatVector& ray, const Rational& x);

// eta(D_ray) = -n! * vol(P) * <b_P, v_ray>, computed as -n! * moment(P, v_ray).
Rational toric_eta(const ToricFano& fan, int ray);
Rational toric_eta(const Polytope& p, const RatVector& ray);

enum class ToricVerdict { NotSemistable, SemistableNotStable };

struct RayStability {
  int ray_index;
  Rational tau;
  Rational eta;
};

struct ToricStabilityReport {
  RatVector barycenter;
  Rational volume;  // vol(P), lattice-normalized Lebesgue
  std::vector<RayStability> per_ray;
  ToricVerdict verdict;
  std::optional<int> witness_ray;  // eta < 0 ray singled out by the exit facet
};

// Witness: the facet hit by the half-line {(1-t) b_P : t >= 0} leaving b_P,
// equivalently the ray maximizing <b_P, v_ray>; ties break to the lowest index.
ToricStabilityReport semistability_verdict(const ToricFano& fan);

enum class OkounkovObstruction {
  ConsistentWithKStable,
  ConsistentWithKSemistableOnly,
  ObstructsKSemistability,
};

struct OkounkovReport {
  RatVector barycenter;
  Rational b1;
  OkounkovObstruction obstruction;
};

// b1 < 1, = 1, > 1 respectively; throws zero_volume_error on degenerate bodies.
OkounkovReport okounkov_barycenter_verdict(const Polytope& body);

const char* to_string(ToricVerdict v);
const char* to_string(OkounkovObstruction o);

struct PiecewisePolynomial {
  std::vector<Rational> breakpoints;     // increasing, first 0, last tau
  std::vector<RatPolynomial> pieces;     // one per interval
};

// x -> n! * vol(P ∩ { <u, v_ray> >= -1 + x }) on [0, tau] as exact polynomials
// between the vertex levels. Its negated derivative recovers the hyperplane
// section area profile up to the (n-1)! factor.
PiecewisePolynomial slice_volume_profile(const ToricFano& fan, int ray);

}  // namespace divstab
