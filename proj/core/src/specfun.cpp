#include "riscap/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace riscap::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

std::complex<double> log_sin_pi(std::complex<double> z) {
  // For |Im| beyond the comfort zone of std::sin, peel off the dominant
  // exponential explicitly so nothing overflows.
  const double v = z.imag();
  if (std::abs(v) > 20.0) {
    const std::complex<double> i(0.0, 1.0);
    if (v > 0.0) return std::log(std::complex<double>(0.0, 0.5)) - i * kPi * z;
    return std::log(std::complex<double>(0.0, -0.5)) + i * kPi * z;
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Reflection. The imaginary part may be off the principal branch by a
    // multiple of 2*pi; exp(log_gamma(z)) is always Gamma(z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  const std::complex<double> zm1 = z - 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
  const std::complex<double> t = zm1 + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("digamma: requires x > 0, got " + std::to_string(x));
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  double tail =
      1.0 / 12.0 -
      inv2 * (1.0 / 120.0 -
              inv2 * (1.0 / 252.0 -
                      inv2 * (1.0 / 240.0 -
                              inv2 * (1.0 / 132.0 -
                                      inv2 * (691.0 / 32760.0 - inv2 / 12.0)))));
  return acc + std::log(x) - 0.5 * inv - inv2 * tail;
}

double trigamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("trigamma: requires x > 0, got " + std::to_string(x));
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  double s =
      inv * (1.0 + 0.5 * inv +
             inv2 * (1.0 / 6.0 -
                     inv2 * (1.0 / 30.0 -
                             inv2 * (1.0 / 42.0 -
                                     inv2 * (1.0 / 30.0 -
                                             inv2 * (5.0 / 66.0 -
                                                     inv2 * 691.0 / 2730.0))))));
  return acc + s;
}

double bessel_k0(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("bessel_k0: requires finite x > 0, got " + std::to_string(x));
  if (x <= 2.0) {
    // Ascending series paired with I0; no cancellation this side of x ~ 15.
    const double q = 0.25 * x * x;
    double term = 1.0, i0 = 1.0, s = 0.0, harmonic = 0.0;
    for (int k = 1; k < 60; ++k) {
      term *= q / (static_cast<double>(k) * k);
      harmonic += 1.0 / k;
      i0 += term;
      s += term * harmonic;
      if (term < 1e-19 * i0) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + s;
  }
  // K0(x) = exp(-x) * integral over t of exp(-2x sinh^2(t/2)). The integrand
  // decays doubly exponentially, so the trapezoid rule converges spectrally;
  // the step only needs to resolve the ~1/sqrt(x) central width.
  const double t_max = 2.0 * std::asinh(std::sqrt(380.0 / x));
  const double h = std::min(0.18, 0.25 / std::sqrt(x));
  const int n = static_cast<int>(t_max / h) + 1;
  double sum = 0.5;
  for (int j = 1; j <= n; ++j) {
    const double sh = std::sinh(0.5 * h * j);
    const double e = 2.0 * x * sh * sh;
    if (e > 760.0) break;
    sum += std::exp(-e);
  }
  return sum * h * std::exp(-x);
}

namespace {

bool near_nonpositive_integer(double v) {
  return v <= 1e-12 && std::abs(v - std::round(v)) < 1e-12;
}

// Plain power series; converges for |x| < 1, used where the ratio stays
// comfortably below one. Also handles the terminating polynomial cases.
double hyp_series(double a, double b, double c, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 20000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("gauss_2f1: series failed to settle at x = " + std::to_string(x));
}

// Connection formula in powers of (1-x) for c = a + b (the logarithmic
// case): sum of (a)_k (b)_k / (k!)^2 (1-x)^k [2 psi(k+1) - psi(a+k)
// - psi(b+k) - ln(1-x)], scaled by Gamma(a+b)/(Gamma(a)Gamma(b)).
double hyp_log_case(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("gauss_2f1: log-case connection needs a, b > 0");
  const double one_minus_x = 1.0 - x;
  const double ell = std::log(one_minus_x);
  double coef = 1.0;
  double dig = 2.0 * digamma(1.0) - digamma(a) - digamma(b);
  double sum = coef * (dig - ell);
  for (int k = 0; k < 10000; ++k) {
    coef *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0)) * one_minus_x;
    dig += 2.0 / (k + 1.0) - 1.0 / (a + k) - 1.0 / (b + k);
    const double term = coef * (dig - ell);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      return sum * std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b));
    }
  }
  throw ConvergenceError("gauss_2f1: logarithmic connection series failed to settle");
}

double gamma_ratio(double num1, double num2, double den1, double den2) {
  // Gamma(num1)Gamma(num2)/(Gamma(den1)Gamma(den2)) with sign tracking.
  auto lg = [](double v, double& sign) {
    if (v > 0.0) return std::lgamma(v);
    // reflection for negative non-integer arguments
    const double s = std::sin(kPi * v);
    if (s == 0.0) throw std::domain_error("gauss_2f1: gamma pole in connection formula");
    if (s < 0.0) sign = -sign;
    return std::log(kPi / std::abs(s)) - std::lgamma(1.0 - v);
  };
  double sign = 1.0;
  double l = lg(num1, sign) + lg(num2, sign);
  double sneg = 1.0;
  l -= lg(den1, sneg) + lg(den2, sneg);
  sign *= sneg;
  return sign * std::exp(l);
}

// Two-series connection formula in powers of (1-x), valid when c-a-b is
// safely non-integer.
double hyp_connection(double a, double b, double c, double x) {
  const double d = c - a - b;
  const double y = 1.0 - x;
  const double t1 = gamma_ratio(c, d, c - a, c - b) * hyp_series(a, b, 1.0 - d, y);
  const double t2 = gamma_ratio(c, -d, a, b) * std::pow(y, d) *
                    hyp_series(c - a, c - b, 1.0 + d, y);
  return t1 + t2;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(x))
    throw std::domain_error("gauss_2f1: non-finite argument");
  if (near_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1: c must not be a nonpositive integer");
  if (x < -1.0 || x >= 1.0)
    throw std::domain_error("gauss_2f1: requires x in [-1, 1), got " + std::to_string(x));
  if (x == 0.0) return 1.0;
  // Terminating polynomial: evaluate directly wherever x lies.
  if (near_nonpositive_integer(a) || near_nonpositive_integer(b))
    return hyp_series(a, b, c, x);
  if (x <= -0.5) {
    // Pfaff transformation onto x/(x-1) in (0, 1/2].
    const double y = x / (x - 1.0);
    return std::pow(1.0 - x, -a) * hyp_series(a, c - b, c, y);
  }
  if (x <= 0.7) return hyp_series(a, b, c, x);
  const double d = c - a - b;
  if (std::abs(d) < 1e-9) return hyp_log_case(a, b, x);
  if (std::abs(d - std::round(d)) > 0.05) return hyp_connection(a, b, c, x);
  // c-a-b close to a nonzero integer: the generic connection formula is
  // ill-conditioned, the direct series still converges for x away from 1.
  if (x <= 0.95) return hyp_series(a, b, c, x);
  throw std::domain_error(
      "gauss_2f1: c-a-b near a nonzero integer with x near 1 is unsupported");
}

// ---------------------------------------------------------------------------
// Meijer-G via truncated vertical-contour (Mellin-Barnes) integration.
// ---------------------------------------------------------------------------

namespace {

// delta > 0 with digamma(delta) = target, by bisection on a log grid.
double inverse_digamma(double target) {
  double lo = 1e-12, hi = 1e12;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (digamma(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

void check_config(const MellinBarnesConfig& cfg, double strip_lo, double strip_hi,
                  const char* what) {
  if (!(cfg.contour_abscissa > strip_lo) || !(cfg.contour_abscissa < strip_hi))
    throw std::invalid_argument(std::string(what) +
                                ": contour abscissa outside the pole-free strip");
  if (!(cfg.truncation_height > 0.0))
    throw std::invalid_argument(std::string(what) + ": truncation height must be positive");
  if (cfg.node_count < 64)
    throw std::invalid_argument(std::string(what) + ": node_count must be at least 64");
}

// Trapezoid sum of (1/pi) Re integral over t in [0, T] of exp(log_f(c + it)),
// computed relative to the t = 0 magnitude so huge or tiny results cannot
// overflow intermediates. The integrand must decay in t; the residual tail is
// estimated from the log-slope over the last step and must stay negligible
// against the accumulated sum.
template <typename LogF>
double contour_integral(LogF&& log_f, const MellinBarnesConfig& cfg, const char* what) {
  const double c = cfg.contour_abscissa;
  const double h = cfg.truncation_height / cfg.node_count;
  const double scale = log_f(std::complex<double>(c, 0.0)).real();
  double sum = 0.5;  // t = 0 term of the scaled integrand is exactly 1
  double mag_last = 1.0, mag_prev = 1.0;
  for (int j = 1; j <= cfg.node_count; ++j) {
    const std::complex<double> lf = log_f(std::complex<double>(c, h * j)) - scale;
    const std::complex<double> v = std::exp(lf);
    sum += (j == cfg.node_count ? 0.5 : 1.0) * v.real();
    mag_prev = mag_last;
    mag_last = std::abs(v);
  }
  const double decay = std::max(std::log(std::max(mag_prev, 1e-300) /
                                         std::max(mag_last, 1e-300)) / h,
                                1e-2);
  const double tail = mag_last / decay;
  const double integral = sum * h / kPi;
  if (!(tail <= 1e-9 * std::max(std::abs(integral), 1e-290)))
    throw ConvergenceError(std::string(what) +
                           ": contour tail exceeds tolerance; raise truncation_height");
  return integral * std::exp(scale);
}

void check_w(double w, const char* what) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw std::domain_error(std::string(what) + ": requires finite w > 0");
}

// Saddle-matched contour for the all-b instances: the integrand
// Gamma(1/2-s)^m w^s has a real saddle at s = 1/2 - delta with
// m*digamma(delta) = ln w. Centering the contour there keeps the integrand
// magnitude on the scale of the result for every w.
MellinBarnesConfig saddle_contour(double w, int m) {
  const double lw = std::log(w);
  if (w < 0.25) {
    // Saddle hugs the pole at s = 1/2 here and would need very fine steps;
    // a fixed abscissa loses only ~w^{-3/4} worth of digits, which is benign
    // on this side.
    return MellinBarnesConfig{-0.25, 40.0, 2000};
  }
  const double delta = inverse_digamma(lw / m);
  const double width = std::sqrt(1.0 / (m * trigamma(delta)));
  const double height = std::max(40.0, 9.0 * std::max(width, 1.0));
  const double step = std::min(0.02, width / 6.0);
  const int nodes = std::min(400000, static_cast<int>(std::ceil(height / step)));
  return MellinBarnesConfig{0.5 - delta, height, nodes};
}

struct Kernel2332 {
  std::vector<double> t;
  std::vector<std::complex<double>> pw;  // gamma product times trapezoid weight
  double tail_bound = 0.0;
};

Kernel2332 build_kernel_2332(const MellinBarnesConfig& cfg) {
  Kernel2332 k;
  const double h = cfg.truncation_height / cfg.node_count;
  double mag_last = 0.0, mag_prev = 0.0;
  for (int j = 0; j <= cfg.node_count; ++j) {
    const std::complex<double> s(cfg.contour_abscissa, h * j);
    const std::complex<double> lg =
        3.0 * log_gamma(0.5 - s) + log_gamma(1.0 + s) + log_gamma(0.5 + s);
    const std::complex<double> p = std::exp(lg);
    mag_prev = mag_last;
    mag_last = std::abs(p);
    const double wgt = (j == 0 || j == cfg.node_count) ? 0.5 * h : h;
    if (std::abs(p) > 1e-22 * kPi * kPi) {
      k.t.push_back(h * j);
      k.pw.push_back(p * wgt);
    }
  }
  const double decay = std::max(std::log(std::max(mag_prev, 1e-300) /
                                         std::max(mag_last, 1e-300)) / h,
                                1e-2);
  k.tail_bound = mag_last / decay;
  return k;
}

}  // namespace

MellinBarnesConfig default_contour_0220(double w) { return saddle_contour(w, 2); }
MellinBarnesConfig default_contour_0330(double w) { return saddle_contour(w, 3); }
MellinBarnesConfig default_contour_2332() { return MellinBarnesConfig{0.0, 40.0, 2000}; }

double meijer_g_0220(double w) { return meijer_g_0220(w, default_contour_0220(w)); }

double meijer_g_0220(double w, const MellinBarnesConfig& cfg) {
  check_w(w, "meijer_g_0220");
  check_config(cfg, -std::numeric_limits<double>::infinity(), 0.5, "meijer_g_0220");
  const double lw = std::log(w);
  return contour_integral(
      [lw](std::complex<double> s) { return 2.0 * log_gamma(0.5 - s) + s * lw; }, cfg,
      "meijer_g_0220");
}

double meijer_g_0330(double w) { return meijer_g_0330(w, default_contour_0330(w)); }

double meijer_g_0330(double w, const MellinBarnesConfig& cfg) {
  check_w(w, "meijer_g_0330");
  check_config(cfg, -std::numeric_limits<double>::infinity(), 0.5, "meijer_g_0330");
  const double lw = std::log(w);
  return contour_integral(
      [lw](std::complex<double> s) { return 3.0 * log_gamma(0.5 - s) + s * lw; }, cfg,
      "meijer_g_0330");
}

double meijer_g_2332(double w) {
  check_w(w, "meijer_g_2332");
  if (w >= 1e7) {
    // Expansion over the left pole string (s = -1/2, -1, -3/2). The direct
    // contour integral cancels down to ~sqrt(1/w) of its integrand scale, so
    // past w ~ 1e7 the residue series is both cheaper and more accurate; the
    // first omitted term is ~3 w^{-3/2} relative.
    const double rpi = std::sqrt(kPi);
    const double rw = std::sqrt(w);
    return rpi / rw - 0.25 * kPi * kPi / w + 2.0 * rpi / (rw * w);
  }
  // The gamma product along the default contour does not depend on w, so it
  // is computed once; each call is then a single oscillatory sweep.
  static const Kernel2332 kernel = build_kernel_2332(default_contour_2332());
  const double lw = std::log(w);
  double sum = 0.0;
  const std::size_t n = kernel.t.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double phase = kernel.t[j] * lw;
    const std::complex<double> rot(std::cos(phase), std::sin(phase));
    sum += (kernel.pw[j] * rot).real();
  }
  const double integral = sum / kPi;
  if (!(kernel.tail_bound <= 1e-9 * std::max(std::abs(integral), 1e-290)))
    throw ConvergenceError("meijer_g_2332: contour tail exceeds tolerance");
  return integral;
}

double meijer_g_2332(double w, const MellinBarnesConfig& cfg) {
  check_w(w, "meijer_g_2332");
  check_config(cfg, -0.5, 0.5, "meijer_g_2332");
  const double lw = std::log(w);
  return contour_integral(
      [lw](std::complex<double> s) {
        return 3.0 * log_gamma(0.5 - s) + log_gamma(1.0 + s) + log_gamma(0.5 + s) + s * lw;
      },
      cfg, "meijer_g_2332");
}

}  // namespace riscap::specfun
