#include "divstab/model_sequence.hpp"

#include <algorithm>

namespace divstab {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);
  }
  return acc;
}

RatPolynomial volume_poly_from_m(int n, const std::vector<Rational>& m) {
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational c = m[static_cast<size_t>(j)] * Rational(binomial(n, j));
    if (j % 2 == 1) c = -c;
    coeffs[static_cast<size_t>(j)] = c;
  }
  return RatPolynomial(std::move(coeffs));
}

RatPolynomial restricted_poly_from_m(int n, const std::vector<Rational>& m) {
  std::vector<Rational> coeffs(static_cast<size_t>(n));
  for (int j = 0; j <= n - 1; ++j) {
    Rational c = m[static_cast<size_t>(j) + 1] * Rational(binomial(n - 1, j));
    if (j % 2 == 1) c = -c;
    coeffs[static_cast<size_t>(j)] = c;
  }
  return RatPolynomial(std::move(coeffs));
}

const RatPolynomial& one_minus_x() {
  static const RatPolynomial p({Rational(1), Rational(-1)});
  return p;
}

}  // namespace

ModelSequence::ModelSequence(int n, std::vector<ModelSegment> segments)
    : n_(n), segments_(std::move(segments)) {
  if (n_ < 1 || n_ > 6) throw precondition_error("sequence dimension must be between 1 and 6");
  if (segments_.empty()) throw precondition_error("sequence needs at least one segment");
  for (const auto& seg : segments_) {
    if (static_cast<int>(seg.m.size()) != n_ + 1)
      throw precondition_error("segment needs n+1 intersection numbers");
  }
  for (const auto& seg : segments_) {
    volume_polys_.push_back(volume_poly_from_m(n_, seg.m));
    restricted_polys_.push_back(restricted_poly_from_m(n_, seg.m));
  }

  auto flag = [&](int seg, std::string msg) {
    validation_.violations.push_back({seg, std::move(msg)});
  };
  if (!segments_.front().tau_lo.is_zero()) flag(0, "first breakpoint must be 0");
  for (size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    const int si = static_cast<int>(i);
    if (seg.tau_lo >= seg.tau_hi)
      flag(si, "breakpoints must strictly increase (zero-length segments are rejected)");
    if (i + 1 < segments_.size() && seg.tau_hi != segments_[i + 1].tau_lo)
      flag(si, "segments must be contiguous at x=" + seg.tau_hi.str());
  }
  for (size_t i = 0; i + 1 < segments_.size(); ++i) {
    const Rational t = segments_[i].tau_hi;
    const int si = static_cast<int>(i);
    if (volume_polys_[i].eval(t) != volume_polys_[i + 1].eval(t))
      flag(si, "V discontinuous at x=" + t.str());
    if (restricted_polys_[i].eval(t) != restricted_polys_[i + 1].eval(t))
      flag(si, "V not C^1 at x=" + t.str());
  }
  if (!volume_polys_.back().eval(segments_.back().tau_hi).is_zero())
    flag(static_cast<int>(segments_.size()) - 1,
         "V must vanish at tau(D)=" + segments_.back().tau_hi.str());
  if (volume_polys_.front().eval(Rational(0)).sign() <= 0)
    flag(0, "V(0) = vol(-K_X) must be positive");

  // sampled nonnegativity of the restricted volume: endpoints, midpoint and
  // rational critical points of each segment
  for (size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    if (seg.tau_lo >= seg.tau_hi) continue;
    std::vector<Rational> samples{seg.tau_lo, seg.tau_hi,
                                  (seg.tau_lo + seg.tau_hi) / Rational(2)};
    for (const auto& root : rational_roots(restricted_polys_[i].derivative()))
      if (root > seg.tau_lo && root < seg.tau_hi) samples.push_back(root);
    for (const auto& x : samples) {
      if (restricted_polys_[i].eval(x).sign() < 0) {
        flag(static_cast<int>(i),
             "restricted volume negative at sample x=" + x.str());
        break;
      }
    }
  }
}

void ModelSequence::require_valid(const char* op) const {
  if (!valid()) {
    std::string msg = std::string(op) + " needs a valid sequence:";
    for (const auto& v : validation_.violations)
      msg += " [segment " + std::to_string(v.segment) + "] " + v.message + ";";
    throw invalid_sequence_error(msg);
  }
}

Rational ModelSequence::volume_at(const Rational& x) const {
  require_valid("volume_at");
  if (x.sign() < 0) throw out_of_range_error("volume_at needs x >= 0");
  if (x >= tau()) return Rational(0);
  for (size_t i = 0; i < segments_.size(); ++i)
    if (x >= segments_[i].tau_lo && x <= segments_[i].tau_hi)
      return volume_polys_[i].eval(x);
  return Rational(0);
}

Rational ModelSequence::restricted_volume_at(const Rational& x) const {
  require_valid("restricted_volume_at");
  if (x.sign() < 0 || x > tau())
    throw out_of_range_error("restricted volume defined on [0, tau(D)]");
  // tau(D) itself evaluates on the last segment by convention
  for (size_t i = 0; i < segments_.size(); ++i)
    if (x < segments_[i].tau_hi || i + 1 == segments_.size())
      return restricted_polys_[i].eval(x);
  return Rational(0);
}

Rational ModelSequence::eta_intersection() const {
  require_valid("eta_intersection");
  Rational acc;
  for (size_t i = 0; i < segments_.size(); ++i)
    acc += integrate(one_minus_x() * restricted_polys_[i], segments_[i].tau_lo,
                     segments_[i].tau_hi);
  return acc * Rational(n_);
}

Rational ModelSequence::eta_volume() const {
  require_valid("eta_volume");
  Rational acc = volume_polys_.front().eval(Rational(0));
  for (size_t i = 0; i < segments_.size(); ++i)
    acc -= integrate(volume_polys_[i], segments_[i].tau_lo, segments_[i].tau_hi);
  return acc;
}

Rational ModelSequence::slope_xi() const {
  require_valid("slope_xi");
  // the nef threshold is the end of the first linearity interval, so segments
  // carrying identical data are coalesced before truncating
  size_t last = 0;
  while (last + 1 < segments_.size() && volume_polys_[last + 1] == volume_polys_[0]) ++last;
  const Rational eps = segments_[last].tau_hi;
  return integrate(one_minus_x() * restricted_polys_[0], Rational(0), eps) * Rational(n_);
}

Rational ModelSequence::eta_scaled(const Rational& c) const {
  require_valid("eta_scaled");
  if (c.sign() <= 0) throw constraint_error("scaling factor must be positive");
  Rational acc;
  for (size_t i = 0; i < segments_.size(); ++i)
    acc += integrate(volume_polys_[i], segments_[i].tau_lo, segments_[i].tau_hi);
  return volume_polys_.front().eval(Rational(0)) - acc / c;
}

Rational df_from_eta(const Rational& eta, int n, int r, const Rational& Kn) {
  if (Kn.sign() <= 0) throw constraint_error("anticanonical degree must be positive");
  if (r < 1) throw constraint_error("r must be a positive integer");
  const Int nf = factorial(n);
  return Rational(int_pow(Int(r), 2 * n)) * Kn / Rational(Int(2 * nf * nf)) * eta;
}

Rational eta_rho_one(int n, const Rational& c, const Rational& Kn) {
  if (c.sign() <= 0) throw constraint_error("proportionality factor must be positive");
  if (Kn.sign() <= 0) throw constraint_error("anticanonical degree must be positive");
  return Kn * (Rational(n + 1) - c) / Rational(n + 1);
}

Rational eta_blowup_ci(int n, const Rational& On, int r, int d1, int d2) {
  if (n < 3) throw constraint_error("eta_blowup_ci needs n >= 3");
  if (On.sign() <= 0) throw constraint_error("(O_Y(1)^n) must be positive");
  if (!(1 <= d1 && d1 < d2 && d2 <= r - 1))
    throw constraint_error("need 1 <= d1 < d2 <= r-1");
  const Int D1 = d1, D2 = d2, R = r;
  const Int gap = D2 - D1;
  const Int term1 = -(gap * gap - D1 * D1) * int_pow(R - D1, n + 1);
  const Int term2 = -D1 * D1 * (Int(n + 1) * gap + (R - D2)) * int_pow(R - D2, n);
  return On * Rational(term1 + term2, Int(n + 1) * D1 * gap * gap);
}

namespace {

Rational g1(int n, int r, int t) {
  const Int R = r, T = t;
  return Rational(int_pow(R, n + 1) - (Int(n) * T + R) * int_pow(R - T, n), T * T);
}

}  // namespace

NegsectionResult eta_negsection_blowup(int n, const Rational& deg, int r, int s, int d) {
  if (n < 3) throw constraint_error("eta_negsection_blowup needs n >= 3");
  if (deg.sign() <= 0) throw constraint_error("(O_Z(1)^{n-1}) must be positive");
  if (!(r > s && s > 0)) throw constraint_error("need r > s > 0");
  if (d < 1) throw constraint_error("need d >= 1");
  if (!(r > d - s)) throw constraint_error("need r > d - s");
  if (d <= s) return {std::nullopt, -1};
  if (d > 2 * s) throw constraint_error("closed form covers s < d <= 2s");
  const int sp = d - s;
  const Rational value = deg / Rational(n + 1) * (g1(n, r, s) - g1(n, r, sp));
  return {value, value.sign()};
}

Rational eta_curve_blowup_3fold(const CurveBlowupParams& params) {
  if (params.tau1 > params.tau2)
    throw invalid_interval_error("eta_curve_blowup_3fold needs tau1 <= tau2");
  if (params.h < 1 || params.e < 1) throw constraint_error("need h >= 1 and e >= 1");
  const Rational e(params.e), h(params.h), r(params.r), d(params.d);
  const RatPolynomial r_minus_ex({r, -e});
  const RatPolynomial one_minus_hx({Rational(1), -h});
  const RatPolynomial big =
      (one_minus_hx * RatPolynomial({h * r + e, h * (h * r - Rational(3) * e)})).scaled(-d) +
      (one_minus_hx * one_minus_hx).scaled(Rational(2 * params.g - 2) * h);
  const RatPolynomial omx({Rational(1), Rational(-1)});
  const Rational first =
      params.H3 * integrate((omx * r_minus_ex * r_minus_ex).scaled(e), Rational(0), params.tau2);
  const Rational second = integrate(omx * big, Rational(0), params.tau1);
  return first + second;
}

}  // namespace divstab
