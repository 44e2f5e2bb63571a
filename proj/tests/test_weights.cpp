#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divstab/weights.hpp"
#include "oracles.hpp"

using namespace divstab;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

ToricFano p2() { return {2, {{1, 0}, {0, 1}, {-1, -1}}, "P^2"}; }
ToricFano bl1_p2() { return {2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, "Bl_1 P^2"}; }
ToricFano bl2_p2() { return {2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {0, -1}}, "Bl_2 P^2"}; }
ToricFano p1xp1() { return {2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "P^1 x P^1"}; }

// Q-Fano with a non-lattice anticanonical polytope: vertex (-1/9, -2/3)
ToricFano nonreflexive() { return {2, {{3, 1}, {-3, 2}, {0, -1}}, "nonreflexive"}; }

Rational anticanonical_degree(const ToricFano& fan) {
  return volume(build_anticanonical_polytope(fan)) * Rational(factorial(fan.dim));
}

}  // namespace

TEST_CASE("section counts") {
  CHECK(section_count(p2(), 1) == 10);
  CHECK(section_count(p2(), 2) == 28);
  CHECK(section_count(bl1_p2(), 1) == 9);
  // the origin is interior, so every count is positive
  for (const auto& fan : {p2(), bl1_p2(), bl2_p2(), p1xp1(), nonreflexive()})
    CHECK(section_count(fan, 1) >= 1);
  CHECK_THROWS_AS(section_count(p2(), 0), precondition_error);
}

TEST_CASE("graded section counts") {
  CHECK(graded_section_count(p2(), 0, 1, 1, 1) == 6);
  CHECK(graded_section_count(p2(), 0, 1, 1, 3) == 1);
  for (long long k : {1, 2, 3})
    CHECK(graded_section_count(p2(), 0, 1, k, 0) == section_count(p2(), k));
  // counting drops to zero past the threshold level kr(tau-1)+kr
  CHECK(graded_section_count(p2(), 0, 1, 2, 6) == 1);
  CHECK(graded_section_count(p2(), 0, 1, 2, 7) == 0);
}

TEST_CASE("weight series on the projective plane") {
  const auto series = weight_series(p2(), 0, 1, {1, 2, 3, 4, 5});
  CHECK(series.tau == q(3));
  // f(k) = (9k^3 + 9k^2 + 2k)/2
  CHECK(series.f_values == std::vector<Int>{Int(10), Int(56), Int(165), Int(364), Int(680)});
  CHECK(series.fitted_f == RatPolynomial({q(0), q(1), q(9, 2), q(9, 2)}));
  // w(k) = -3k h^0(-3k K) + f(k) = -9k^3 - 9k^2 - 2k
  CHECK(series.w_values[0] == Int(-20));
  CHECK(series.fitted_w == RatPolynomial({q(0), q(-2), q(-9), q(-9)}));
  CHECK(eta_from_weights(series) == q(0));
  CHECK(df_from_weights(series, q(9)) == q(0));
}

TEST_CASE("w and f satisfy the defining relation at every sample") {
  for (const auto& fan : {p2(), bl1_p2(), bl2_p2(), p1xp1()}) {
    for (int ray = 0; ray < static_cast<int>(fan.rays.size()); ++ray) {
      const auto series = weight_series(fan, ray, 1);
      for (size_t i = 0; i < series.ks.size(); ++i) {
        const long long k = series.ks[i];
        const Rational krtau = q(k) * series.tau;
        REQUIRE(krtau.is_integer());
        CHECK(series.w_values[i] ==
              Int(-krtau.numerator() * section_count(fan, k) + series.f_values[i]));
      }
    }
  }
}

TEST_CASE("f equals the sum of graded counts") {
  for (const auto& fan : {p2(), bl1_p2()}) {
    for (int ray = 0; ray < static_cast<int>(fan.rays.size()); ++ray) {
      const auto series = weight_series(fan, ray, 1);
      for (size_t i = 0; i < 2; ++i) {
        const long long k = series.ks[i];
        const long long top = (q(k) * series.tau).numerator().convert_to<long long>();
        Int total = 0;
        for (long long j = 1; j <= top; ++j)
          total += graded_section_count(fan, ray, 1, k, j);
        CHECK(total == series.f_values[i]);
      }
    }
  }
}

TEST_CASE("eta from weights agrees with the toric engine") {
  const ToricFano p1{1, {{1}, {-1}}, "P^1"};
  for (int ray : {0, 1})
    CHECK(eta_from_weights(weight_series(p1, ray, 1)) == toric_eta(p1, ray));
  for (const auto& fan : {p2(), bl1_p2(), bl2_p2(), p1xp1()}) {
    for (int ray = 0; ray < static_cast<int>(fan.rays.size()); ++ray) {
      const auto series = weight_series(fan, ray, 1);
      CHECK(eta_from_weights(series) == toric_eta(fan, ray));
    }
  }
  CHECK(eta_from_weights(weight_series(bl1_p2(), 3, 1)) == q(-4, 3));
  CHECK(eta_from_weights(weight_series(bl2_p2(), 0, 1)) == q(-4, 3));
}

TEST_CASE("both DF routes coincide") {
  for (const auto& fan : {p2(), bl1_p2(), bl2_p2(), p1xp1()}) {
    const Rational kn = anticanonical_degree(fan);
    for (int ray = 0; ray < static_cast<int>(fan.rays.size()); ++ray) {
      for (int r : {1, 2}) {
        const auto series = weight_series(fan, ray, r);
        CHECK(df_from_weights(series, kn) ==
              df_from_eta(eta_from_weights(series), fan.dim, r, kn));
      }
    }
  }
  CHECK(df_from_weights(weight_series(bl1_p2(), 3, 1), q(8)) == q(-4, 3));
  // eta = 0 stays a fixed point under r scaling
  CHECK(df_from_weights(weight_series(p2(), 0, 2), q(9)) == q(0));
}

TEST_CASE("leading fitted coefficient is the integrated volume profile") {
  for (const auto& fan : {p2(), bl1_p2(), bl2_p2(), p1xp1()}) {
    const Polytope p = build_anticanonical_polytope(fan);
    const int n = fan.dim;
    for (int ray = 0; ray < static_cast<int>(fan.rays.size()); ++ray) {
      const RatVector v = ray_vector(fan, ray);
      for (int r : {1, 2}) {
        const auto series = weight_series(fan, ray, r);
        const Rational f_top = series.fitted_f.coeff(n + 1);
        const Rational rpow = Rational::pow(q(r), n + 1);
        // moment identity route
        CHECK(f_top == rpow * (moment(p, v) + volume(p)));
        // piecewise slice-profile route
        const auto profile = slice_volume_profile(fan, ray);
        Rational integral;
        for (size_t i = 0; i < profile.pieces.size(); ++i)
          integral += integrate(profile.pieces[i], profile.breakpoints[i],
                                profile.breakpoints[i + 1]);
        CHECK(f_top == rpow * integral / Rational(factorial(n)));
      }
    }
  }
}

TEST_CASE("default stride handles non-lattice polytopes") {
  const auto fan = nonreflexive();
  const Polytope p = build_anticanonical_polytope(fan);
  CHECK(volume(p).denominator() != 1);  // genuinely non-lattice data
  CHECK(default_step(fan, 0, 1) == 9);
  const auto series = weight_series(fan, 0, 1);
  CHECK(eta_from_weights(series) == toric_eta(fan, 0));
  for (int ray : {1, 2})
    CHECK(eta_from_weights(weight_series(fan, ray, 1)) == toric_eta(fan, ray));
}

TEST_CASE("undersized strides are detected as fit mismatches") {
  CHECK_THROWS_AS(weight_series(nonreflexive(), 0, 1, {1, 2, 3, 4, 5, 6}), fit_error);
  try {
    weight_series(nonreflexive(), 0, 1, {1, 2, 3, 4, 5, 6});
  } catch (const fit_error& e) {
    CHECK(e.suggested_step() == 2);
  }
}

TEST_CASE("sample preconditions") {
  CHECK_THROWS_AS(weight_series(p2(), 0, 1, {1, 2, 3}), precondition_error);
  // k r tau integrality: tau(E) = 2 on Bl_1 P^2, any k works; for the
  // nonreflexive fan tau = 5 on ray 0, integral too. Force a fractional
  // case through ray 1: tau = 1 + max<u, (-3,2)> over vertices.
  const auto fan = nonreflexive();
  const Rational tau1 = pseudoeffective_threshold(fan, 1);
  if (!tau1.is_integer()) {
    CHECK_THROWS_AS(weight_series(fan, 1, 1, {1, 2, 3, 4, 5}), precondition_error);
  }
}
