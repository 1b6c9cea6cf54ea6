#pragma once

#include <complex>

#include "riscap/errors.hpp"

namespace riscap::specfun {

// Principal-branch log-gamma for complex arguments.
//
// Lanczos approximation (g = 7, 9 terms) in the right half-plane, reflection
// formula for Re z < 1/2. Relative accuracy is ~1e-14 over the strips used by
// the Mellin-Barnes contours below, comfortably past the 13-digit budget the
// contour integrands need.
std::complex<double> log_gamma(std::complex<double> z);

// Digamma for x > 0: argument recurrence up to x >= 8, then the Bernoulli
// asymptotic series. Accurate to ~1e-15.
double digamma(double x);

// Trigamma for x > 0 (same scheme as digamma).
double trigamma(double x);

// Modified Bessel function of the second kind, order zero.
//
// x <= 2 uses the ascending series paired with I0; larger x integrates
// exp(-x*cosh t) by trapezoid after factoring out exp(-x), which keeps the
// integrand O(1) and converges spectrally (the integrand decays doubly
// exponentially in t). Relative error stays below ~5e-14 across
// [1e-8, 700]; for x beyond ~745 the exp(-x) factor underflows to zero.
double bessel_k0(double x);

// Gauss hypergeometric 2F1(a, b; c; x) for real parameters and x in [-1, 1).
//
// Evaluation regions:
//   x <= -0.5          Pfaff transformation onto x/(x-1) in (0, 1/2]
//   |x| < 0.7          direct series
//   x in (0.7, 1)      connection formula in powers of (1-x); the
//                      logarithmic variant when c-a-b is ~0, the two-series
//                      gamma form when c-a-b is safely non-integer.
// Requires c not a nonpositive integer. Throws std::domain_error outside
// [-1, 1) and ConvergenceError if a series fails to settle.
double gauss_2f1(double a, double b, double c, double x);

// Vertical-contour truncation for the Mellin-Barnes integrals behind the
// Meijer-G evaluators. The abscissa must stay inside the pole-free strip of
// the instance it is used with (left of +1/2 for the two all-b instances,
// inside (-1/2, 1/2) for the 2,3/3,2 instance).
struct MellinBarnesConfig {
  double contour_abscissa = 0.0;
  double truncation_height = 40.0;
  int node_count = 2000;
};

// Contour defaults. The all-b instances move the abscissa onto the real
// saddle of the integrand, which keeps the integrand magnitude on the scale
// of the result; a fixed contour loses one digit per unit of 2*sqrt(w) to
// cancellation and is useless past w ~ 60.
MellinBarnesConfig default_contour_0220(double w);
MellinBarnesConfig default_contour_0330(double w);
MellinBarnesConfig default_contour_2332();

// G^{2,0}_{0,2}(w | -; 1/2, 1/2) = 2 sqrt(w) K0(2 sqrt(w)), w > 0.
double meijer_g_0220(double w);
double meijer_g_0220(double w, const MellinBarnesConfig& cfg);

// G^{3,0}_{0,3}(w | -; 1/2, 1/2, 1/2), w > 0. (1/sqrt(2)) of it at w = g^2/8
// is the triple-cascade amplitude density.
double meijer_g_0330(double w);
double meijer_g_0330(double w, const MellinBarnesConfig& cfg);

// G^{3,2}_{2,3}(w | 0, 1/2; 1/2, 1/2, 1/2), w > 0. Composed with the
// 1/(zeta*sqrt(2*pi)) prefactor at w = 1/(2 zeta^2) it gives the
// triple-cascade Laplace transform. The default path switches to the
// left-pole residue expansion for w >= 1e7, where the contour integral
// cancels below double precision; the config overload always integrates.
double meijer_g_2332(double w);
double meijer_g_2332(double w, const MellinBarnesConfig& cfg);

}  // namespace riscap::specfun
