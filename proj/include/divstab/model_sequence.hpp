// The eta invariant from ample-model-sequence data: per-segment intersection
// numbers drive piecewise volume polynomials, and eta is computed two
// independent ways (weighted restricted-volume integrals and the volume
// deficit). Closed forms for the proportional, complete-intersection-blowup,
// negative-section-blowup and curve-blowup families live here too.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divstab/polynomial.hpp"

namespace divstab {

// intersections m_j = ((-K_{X_i})^{n-j} . D_i^j) for j = 0..n
struct ModelSegment {
  Rational tau_lo;
  Rational tau_hi;
  std::vector<Rational> m;
};

struct ValidationIssue {
  int segment;  // -1 for sequence-level issues
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> violations;
  bool valid() const { return violations.empty(); }
};

class ModelSequence {
 public:
  // Structural shape (n >= 1, nonempty, m of length n+1) is enforced here;
  // every mathematical invariant is reported by validation() instead.
  ModelSequence(int n, std::vector<ModelSegment> segments);

  int n() const { return n_; }
  const std::vector<ModelSegment>& segments() const { return segments_; }
  // V_i(x) = sum_j C(n,j) (-x)^j m_j
  const RatPolynomial& volume_poly(int i) const { return volume_polys_[static_cast<size_t>(i)]; }
  // p_i(x) = sum_j C(n-1,j) (-x)^j m_{j+1} = -(1/n) V_i'(x)
  const RatPolynomial& restricted_poly(int i) const {
    return restricted_polys_[static_cast<size_t>(i)];
  }
  Rational tau() const { return segments_.back().tau_hi; }
  const ValidationReport& validation() const { return validation_; }
  bool valid() const { return validation_.valid(); }

  Rational volume_at(const Rational& x) const;            // 0 for x >= tau
  Rational restricted_volume_at(const Rational& x) const;  // defined on [0, tau]
  Rational eta_intersection() const;  // sum_i n * integral (1-x) p_i
  Rational eta_volume() const;        // V(0) - integral of V
  Rational slope_xi() const;          // first linearity interval only
  Rational eta_scaled(const Rational& c) const;  // for D' ~ c D

 private:
  void require_valid(const char* op) const;

  int n_;
  std::vector<ModelSegment> segments_;
  std::vector<RatPolynomial> volume_polys_;
  std::vector<RatPolynomial> restricted_polys_;
  ValidationReport validation_;
};

// DF of the basic semi test configuration: r^{2n} Kn / (2 (n!)^2) * eta.
Rational df_from_eta(const Rational& eta, int n, int r, const Rational& Kn);

// -K_X ~ c D: eta = Kn (n+1-c) / (n+1).
Rational eta_rho_one(int n, const Rational& c, const Rational& Kn);

// Blowup of Y (Pic = Z, -K_Y = rH) along the complete intersection of
// divisors of degrees d1 < d2, along the strict transform of the first.
Rational eta_blowup_ci(int n, const Rational& On, int r, int d1, int d2);

struct NegsectionResult {
  std::optional<Rational> value;  // closed form, available for s < d <= 2s
  int sign;                       // -1, 0 or +1
};

// Blowup of P_Z(O + O(s)) along a divisor of degree d inside the positive
// section, along the strict transform of the negative section. For d <= s the
// convexity argument gives the sign without a closed form.
NegsectionResult eta_negsection_blowup(int n, const Rational& deg, int r, int s, int d);

struct CurveBlowupParams {
  Rational H3;  // (H^3) on the blown-down model
  int r = 0;    // -K = rH there
  int e = 0;    // pushforward degree: D_2 ~ eH
  int h = 0;    // D + hF = pullback of D_2
  int d = 0;    // degree of the blown-up curve
  int g = 0;    // genus of the blown-up curve
  Rational tau1;
  Rational tau2;
};

// Returns eta(D)/3 for threefolds fitting the curve-blowup pattern.
Rational eta_curve_blowup_3fold(const CurveBlowupParams& params);

}  // namespace divstab
