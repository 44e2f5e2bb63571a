// Brute-force verification path on toric varieties: section counts by lattice
// point enumeration, the f(k)/w(k) series of the basic semi test
// configuration, exact polynomial fits, and eta/DF recovered from the fitted
// top coefficients.
#pragma once

#include <vector>

#include "divstab/polynomial.hpp"
#include "divstab/toric.hpp"

namespace divstab {

struct WeightSeries {
  int n = 0;
  int ray = 0;
  int r = 1;
  Rational tau;
  std::vector<long long> ks;
  std::vector<Int> f_values;
  std::vector<Int> w_values;
  RatPolynomial fitted_f;
  RatPolynomial fitted_w;
};

// #(kP ∩ Z^n) = h^0(-kK_X).
Int section_count(const ToricFano& fan, long long k);

// #{ u in krP ∩ Z^n : <u, v_ray> >= -kr + j } = h^0(-krK_X - jD_ray).
Int graded_section_count(const ToricFano& fan, int ray, long long r, long long k, long long j);

// Smallest sampling stride making every f(k) sample well defined and the
// series exactly polynomial on reflexive inputs: (lattice multiple of P) * r *
// denominator(tau).
long long default_step(const ToricFano& fan, int ray, int r);

// Samples f and w on the given multipliers (kr*tau must be integral for each),
// fits degree <= n+1 through the first n+2 samples and verifies the rest
// exactly; mismatches raise fit_error with a doubled-stride suggestion.
WeightSeries weight_series(const ToricFano& fan, int ray, int r, std::vector<long long> ks);

// Default sampling: step * {1, ..., n+3}.
WeightSeries weight_series(const ToricFano& fan, int ray, int r);

// eta = n!/r^{n+1} (n f_{n+1} - 2 r f_n) from the fitted f coefficients.
Rational eta_from_weights(const WeightSeries& series);

// DF = (r^n Kn)/n! (n/(2r) w_{n+1} - w_n) from the fitted w coefficients.
Rational df_from_weights(const WeightSeries& series, const Rational& Kn);

}  // namespace divstab
