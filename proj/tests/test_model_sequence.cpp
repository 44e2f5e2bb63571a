#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divstab/model_sequence.hpp"
#include "oracles.hpp"

using namespace divstab;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

ModelSegment seg(Rational lo, Rational hi, std::vector<Rational> m) {
  return {std::move(lo), std::move(hi), std::move(m)};
}

ModelSequence bl1_seq() { return ModelSequence(2, {seg(q(0), q(2), {q(8), q(1), q(-1)})}); }

ModelSequence bl2_seq() {
  return ModelSequence(2, {seg(q(0), q(1), {q(7), q(1), q(-1)}),
                           seg(q(1), q(3), {q(9), q(3), q(1)})});
}

ModelSequence p2_line_seq() { return ModelSequence(2, {seg(q(0), q(3), {q(9), q(3), q(1)})}); }

bool has_violation(const ModelSequence& s, const std::string& needle) {
  for (const auto& v : s.validation().violations)
    if (v.message.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validation accepts the worked sequences") {
  CHECK(bl1_seq().valid());
  CHECK(bl2_seq().valid());
  CHECK(p2_line_seq().valid());
  // C^1 matching at x=1 for the two-segment data: p1(1) = 2 = p2(1)
  CHECK(bl2_seq().restricted_poly(0).eval(q(1)) == q(2));
  CHECK(bl2_seq().restricted_poly(1).eval(q(1)) == q(2));
}

TEST_CASE("validation flags every broken invariant") {
  const ModelSequence discontinuous(
      2, {seg(q(0), q(1), {q(7), q(1), q(-1)}), seg(q(1), q(3), {q(9), q(3), q(0)})});
  CHECK_FALSE(discontinuous.valid());
  CHECK(has_violation(discontinuous, "V discontinuous at x=1"));

  const ModelSequence zero_length(2, {seg(q(0), q(0), {q(8), q(1), q(-1)})});
  CHECK(has_violation(zero_length, "strictly increase"));

  const ModelSequence late_start(2, {seg(q(1), q(2), {q(8), q(1), q(-1)})});
  CHECK(has_violation(late_start, "first breakpoint"));

  const ModelSequence gap(2, {seg(q(0), q(1), {q(7), q(1), q(-1)}),
                              seg(q(2), q(3), {q(9), q(3), q(1)})});
  CHECK(has_violation(gap, "contiguous"));

  const ModelSequence nonzero_tail(2, {seg(q(0), q(2), {q(8), q(1), q(0)})});
  CHECK(has_violation(nonzero_tail, "vanish at tau"));

  // V stays continuous at x=1 (8-6+2 = 4) but p jumps from 2 to 1
  const ModelSequence kink(2, {seg(q(0), q(1), {q(7), q(1), q(-1)}),
                               seg(q(1), q(5, 2), {q(8), q(3), q(2)})});
  CHECK(has_violation(kink, "not C^1"));

  // p(x) = -1 - x < 0 while V stays consistent
  const ModelSequence negative_p(2, {seg(q(0), q(2), {q(-8), q(-1), q(1)})});
  CHECK(has_violation(negative_p, "restricted volume negative"));
  CHECK(has_violation(negative_p, "positive"));

  CHECK_THROWS_AS(negative_p.eta_intersection(), invalid_sequence_error);
  CHECK_THROWS_AS(ModelSequence(2, {seg(q(0), q(1), {q(1), q(1)})}), precondition_error);
}

TEST_CASE("interior critical points are sampled for positivity") {
  // n=3 single segment on [0,2]: p(x) = (x-1)^2 - 1/9 dips negative only
  // around x=1, away from endpoints and midpoint... midpoint IS 1 here, so
  // shift the segment: [0,4], p has min at 3 with p(3) < 0, midpoint 2.
  // p(x) = (x-3)^2 - 1/9 = x^2 - 6x + 80/9; need degree <= n-1 = 2 with
  // matching V. m_1 = p(0) = 80/9, m_2 = -p'(0)/2... from
  // p = m1 - 2 m2 x + m3 x^2: m2 = 3, m3 = 1. V(4) = 0 fixes m0:
  // V = m0 - 3 m1 x + 3 m2 x^2 - m3 x^3 = m0 - 80/3 x + 9x^2 - x^3.
  // V(4) = m0 - 320/3 + 144 - 64 = m0 - 80/3 + 80 - 64 ... compute: m0 =
  // 320/3 - 144 + 64 = 320/3 - 80 = 80/3.
  const ModelSequence dip(3, {seg(q(0), q(4), {q(80, 3), q(80, 9), q(3), q(1)})});
  CHECK(dip.volume_poly(0).eval(q(4)).is_zero());
  CHECK(dip.restricted_poly(0).eval(q(3)) == q(-1, 9));
  CHECK(has_violation(dip, "restricted volume negative at sample x=3"));
}

TEST_CASE("volume_at") {
  CHECK(bl1_seq().volume_at(q(1)) == q(5));
  CHECK(bl1_seq().volume_at(q(2)) == q(0));
  CHECK(bl1_seq().volume_at(q(7)) == q(0));
  CHECK(bl2_seq().volume_at(q(2)) == q(1));
  CHECK(bl2_seq().volume_at(q(1)) == q(4));  // both segments agree at the breakpoint
  CHECK_THROWS_AS(bl1_seq().volume_at(q(-1)), out_of_range_error);
}

TEST_CASE("restricted_volume_at") {
  CHECK(bl1_seq().restricted_volume_at(q(0)) == q(1));
  CHECK(bl2_seq().restricted_volume_at(q(3)) == q(0));  // last-segment convention at tau
  CHECK(bl2_seq().restricted_volume_at(q(1)) == q(2));
  CHECK_THROWS_AS(bl1_seq().restricted_volume_at(q(5, 2)), out_of_range_error);
}

TEST_CASE("restricted volume is minus a 1/n derivative, per segment") {
  for (const auto& s : {bl1_seq(), bl2_seq(), p2_line_seq()}) {
    for (size_t i = 0; i < s.segments().size(); ++i) {
      const RatPolynomial expected = s.volume_poly(static_cast<int>(i))
                                         .derivative()
                                         .scaled(q(-1, s.n()));
      CHECK(expected == s.restricted_poly(static_cast<int>(i)));
    }
  }
}

TEST_CASE("eta through both engines") {
  CHECK(bl1_seq().eta_intersection() == q(-4, 3));
  CHECK(bl1_seq().eta_volume() == q(-4, 3));
  CHECK(p2_line_seq().eta_intersection() == q(0));
  CHECK(p2_line_seq().eta_volume() == q(0));
  CHECK(bl2_seq().eta_intersection() == q(-4, 3));
  CHECK(bl2_seq().eta_volume() == q(-4, 3));
}

TEST_CASE("slope invariant") {
  CHECK(bl1_seq().slope_xi() == q(-4, 3));
  CHECK(bl2_seq().slope_xi() == q(4, 3));
  CHECK(p2_line_seq().slope_xi() == q(0));
}

TEST_CASE("eta never exceeds xi once the nef threshold passes 1") {
  oracles::Rng rng(0x5eed0020ULL);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const auto s = oracles::random_valid_sequence(rng, n, q(5, 4));
    REQUIRE(s.valid());
    if (s.segments().front().tau_hi < q(1)) continue;
    CHECK(s.eta_intersection() <= s.slope_xi());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("df conversion") {
  CHECK(df_from_eta(q(0), 2, 1, q(9)) == q(0));
  CHECK(df_from_eta(q(-4, 3), 2, 1, q(8)) == q(-4, 3));
  CHECK(df_from_eta(q(-4, 3), 2, 2, q(8)) == q(-64, 3));
  CHECK_THROWS_AS(df_from_eta(q(1), 2, 1, q(0)), constraint_error);
  // linear in eta, scales as r^{2n}
  oracles::Rng rng(0x5eed0021ULL);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 2));
    const Rational eta = rng.rational(20, 7);
    const Rational kn = rng.positive_rational(60, 1);
    const int r = static_cast<int>(rng.uniform(1, 4));
    CHECK(df_from_eta(eta + eta, n, r, kn) == df_from_eta(eta, n, r, kn) * q(2));
    CHECK(df_from_eta(eta, n, 2 * r, kn) ==
          df_from_eta(eta, n, r, kn) * Rational::pow(q(2), 2 * n));
  }
}

TEST_CASE("rho-one closed form") {
  CHECK(eta_rho_one(3, q(4), q(64)) == q(0));
  CHECK(eta_rho_one(3, q(3), q(54)) == q(27, 2));
  CHECK(eta_rho_one(2, q(3), q(9)) == q(0));
  CHECK(eta_rho_one(3, q(2), q(54)).sign() > 0);
  CHECK(eta_rho_one(3, q(9, 2), q(64)).sign() < 0);
}

TEST_CASE("complete-intersection blowup closed form") {
  CHECK(eta_blowup_ci(3, q(1), 4, 1, 2) == q(-12));
  CHECK(eta_blowup_ci(3, q(1), 4, 1, 3) == q(-63, 4));
  CHECK(eta_blowup_ci(3, q(1), 4, 2, 3) == q(7, 2));
  CHECK(eta_blowup_ci(4, q(1), 5, 2, 4) == q(-11, 10));
  CHECK_THROWS_AS(eta_blowup_ci(3, q(1), 4, 2, 2), constraint_error);
  CHECK_THROWS_AS(eta_blowup_ci(3, q(1), 4, 1, 4), constraint_error);
  CHECK_THROWS_AS(eta_blowup_ci(2, q(1), 4, 1, 2), constraint_error);
}

TEST_CASE("complete-intersection blowup matches its two-segment sequence") {
  for (int n = 3; n <= 4; ++n) {
    for (int r = 3; r <= 6; ++r) {
      for (int d1 = 1; d1 < r; ++d1) {
        for (int d2 = d1 + 1; d2 <= r - 1; ++d2) {
          const Rational on(1 + ((n + r) % 3));
          const auto seq2 = oracles::blowup_ci_sequence(n, on, r, d1, d2);
          REQUIRE(seq2.valid());
          const Rational closed = eta_blowup_ci(n, on, r, d1, d2);
          CHECK(closed == seq2.eta_intersection());
          CHECK(closed == seq2.eta_volume());
          if (d2 >= 2 * d1) CHECK(closed.sign() < 0);
        }
      }
    }
  }
}

TEST_CASE("negative-section blowup closed form") {
  const auto zero = eta_negsection_blowup(3, q(1), 4, 1, 2);
  REQUIRE(zero.value.has_value());
  CHECK(*zero.value == q(0));
  CHECK(zero.sign == 0);

  const auto neg = eta_negsection_blowup(3, q(1), 4, 2, 3);
  REQUIRE(neg.value.has_value());
  CHECK(*neg.value == q(-23, 4));
  CHECK(neg.sign == -1);

  const auto neg2 = eta_negsection_blowup(3, q(2), 5, 2, 3);
  REQUIRE(neg2.value.has_value());
  CHECK(*neg2.value == q(-31, 2));

  const auto sign_only = eta_negsection_blowup(3, q(1), 4, 2, 2);
  CHECK_FALSE(sign_only.value.has_value());
  CHECK(sign_only.sign == -1);

  CHECK_THROWS_AS(eta_negsection_blowup(3, q(1), 4, 1, 3), constraint_error);  // d > 2s
  CHECK_THROWS_AS(eta_negsection_blowup(3, q(1), 2, 2, 3), constraint_error);  // r <= s
  CHECK_THROWS_AS(eta_negsection_blowup(3, q(1), 3, 1, 5), constraint_error);  // r <= d-s
}

TEST_CASE("negative-section blowup matches its two-segment sequence") {
  for (int n = 3; n <= 4; ++n) {
    for (int r = 2; r <= 6; ++r) {
      for (int s = 1; s < r; ++s) {
        for (int d = s + 1; d <= 2 * s; ++d) {
          if (d - s >= r) continue;
          const Rational deg(1 + ((n + s) % 3));
          const auto seq2 = oracles::negsection_sequence(n, deg, r, s, d);
          REQUIRE(seq2.valid());
          const auto closed = eta_negsection_blowup(n, deg, r, s, d);
          REQUIRE(closed.value.has_value());
          CHECK(*closed.value == seq2.eta_intersection());
          CHECK(*closed.value == seq2.eta_volume());
          CHECK((d == 2 * s ? closed.value->is_zero() : closed.value->sign() < 0));
        }
      }
    }
  }
}

TEST_CASE("curve blowup threefold values") {
  auto params = [](Rational h3, int r, int e, int h, int d, int g, Rational t1, Rational t2) {
    CurveBlowupParams p;
    p.H3 = std::move(h3);
    p.r = r;
    p.e = e;
    p.h = h;
    p.d = d;
    p.g = g;
    p.tau1 = std::move(t1);
    p.tau2 = std::move(t2);
    return p;
  };
  CHECK(eta_curve_blowup_3fold(params(q(1), 4, 2, 1, 6, 4, q(1), q(2))) == q(7, 6));
  CHECK(eta_curve_blowup_3fold(params(q(1), 4, 2, 1, 5, 2, q(1), q(2))) == q(2));
  CHECK(eta_curve_blowup_3fold(params(q(1), 4, 2, 1, 4, 0, q(1), q(2))) == q(17, 6));
  CHECK(eta_curve_blowup_3fold(params(q(2), 3, 1, 1, 3, 0, q(1), q(3))) == q(0));
  CHECK(eta_curve_blowup_3fold(params(q(5), 2, 1, 2, 1, 0, q(1, 2), q(2))) == q(239, 48));
  CHECK(eta_curve_blowup_3fold(params(q(2), 3, 1, 1, 2, 0, q(1), q(3))) == q(4, 3));
  CHECK_THROWS_AS(eta_curve_blowup_3fold(params(q(1), 4, 2, 1, 6, 4, q(2), q(1))),
                  invalid_interval_error);
  CHECK_THROWS_AS(eta_curve_blowup_3fold(params(q(1), 4, 2, 0, 6, 4, q(1), q(2))),
                  constraint_error);
}

TEST_CASE("scaled divisor") {
  CHECK(bl1_seq().eta_scaled(q(1)) == q(-4, 3));
  CHECK(p2_line_seq().eta_scaled(q(3)) == q(6));
  CHECK_THROWS_AS(bl1_seq().eta_scaled(q(0)), constraint_error);
  // semistable along D and c > 1 forces stability along cD
  oracles::Rng rng(0x5eed0022ULL);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const auto s = oracles::random_valid_sequence(rng, n);
    if (s.eta_volume().sign() < 0) continue;
    const Rational c = q(1) + rng.positive_rational(4, 3);
    CHECK(s.eta_scaled(c).sign() > 0);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("the two eta engines agree on random valid sequences") {
  oracles::Rng rng(0x5eed0023ULL);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const auto s = oracles::random_valid_sequence(rng, n);
    REQUIRE(s.valid());
    CHECK(s.eta_intersection() == s.eta_volume());
  }
}

TEST_CASE("nonpositive eta forces the threshold past 1") {
  oracles::Rng rng(0x5eed0024ULL);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const auto s = oracles::random_valid_sequence(rng, n);
    if (s.eta_intersection().sign() <= 0) CHECK(s.tau() > q(1));
  }
}

TEST_CASE("volume curvature bounds the sign of eta through the threshold") {
  // concave V (p increasing) with tau >= 2 forces eta <= 0; convex V (p
  // decreasing) with tau <= 2 forces eta >= 0. Both reduce to comparing the
  // integral of V with the chord value V(0) tau / 2.
  oracles::Rng rng(0x5eed0025ULL);
  auto sequence_from_p = [&](const RatPolynomial& p, const Rational& tau, int n) {
    const RatPolynomial prim = p.antiderivative();
    const RatPolynomial v =
        RatPolynomial::constant(Rational(n) * prim.eval(tau)) - prim.scaled(Rational(n));
    std::vector<Rational> m;
    Int binom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) binom = binom * (n - j + 1) / j;
      Rational c = v.coeff(j) / Rational(binom);
      if (j % 2 == 1) c = -c;
      m.push_back(c);
    }
    return ModelSequence(n, {seg(q(0), tau, std::move(m))});
  };
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));

    // concave: p an increasing nonnegative polynomial, threshold >= 2
    const Rational tau_hi = q(2) + Rational(rng.uniform(0, 5), rng.uniform(1, 2));
    const RatPolynomial p_up = oracles::random_nonneg_poly(rng, n - 1, true);
    const ModelSequence concave = sequence_from_p(p_up, tau_hi, n);
    REQUIRE(concave.valid());
    CHECK(concave.eta_intersection().sign() <= 0);

    // convex: p a decreasing nonnegative polynomial, threshold <= 2
    const Rational tau_lo = q(2) - Rational(rng.uniform(0, 3), rng.uniform(2, 4));
    RatPolynomial p_down;
    for (int j = 0; j <= n - 1; ++j) {
      RatPolynomial power = RatPolynomial::constant(q(1));
      for (int k = 0; k < j; ++k) power = power * RatPolynomial({tau_lo, q(-1)});
      p_down = p_down + power.scaled(Rational(rng.uniform(0, 3)));
    }
    if (p_down.is_zero()) p_down = RatPolynomial({tau_lo, q(-1)});
    const ModelSequence convex = sequence_from_p(p_down, tau_lo, n);
    REQUIRE(convex.valid());
    CHECK(convex.eta_intersection().sign() >= 0);
  }
  // the worked blowup sequence is a confirming concave instance
  CHECK(bl1_seq().volume_poly(0).derivative().derivative() ==
        RatPolynomial::constant(q(-2)));
  CHECK(bl1_seq().tau() == q(2));
  CHECK(bl1_seq().eta_intersection() < q(0));
}

TEST_CASE("splitting a segment changes nothing") {
  oracles::Rng rng(0x5eed0026ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const auto s = oracles::random_valid_sequence(rng, n);
    const size_t pick = static_cast<size_t>(rng.uniform(0, static_cast<long long>(s.segments().size()) - 1));
    std::vector<ModelSegment> split;
    for (size_t i = 0; i < s.segments().size(); ++i) {
      const auto& sg = s.segments()[i];
      if (i == pick) {
        const Rational mid = (sg.tau_lo + sg.tau_hi) / q(2);
        split.push_back({sg.tau_lo, mid, sg.m});
        split.push_back({mid, sg.tau_hi, sg.m});
      } else {
        split.push_back(sg);
      }
    }
    const ModelSequence t(n, std::move(split));
    REQUIRE(t.valid());
    CHECK(t.eta_intersection() == s.eta_intersection());
    CHECK(t.eta_volume() == s.eta_volume());
    CHECK(t.slope_xi() == s.slope_xi());
    for (int i = 0; i <= 8; ++i) {
      const Rational x = s.tau() * q(i, 8);
      CHECK(t.volume_at(x) == s.volume_at(x));
      CHECK(t.restricted_volume_at(x) == s.restricted_volume_at(x));
    }
  }
}
