#include "riscap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace riscap::quadrature {

void QuadratureSpec::validate() const {
  if (method == Method::GaussLaguerre && node_count < 64)
    throw std::invalid_argument("QuadratureSpec: Gauss-Laguerre needs node_count >= 64");
  if (node_count < 1)
    throw std::invalid_argument("QuadratureSpec: node_count must be positive");
  if (!(rel_tolerance > 0.0) || rel_tolerance > 1e-6)
    throw std::invalid_argument("QuadratureSpec: rel_tolerance must lie in (0, 1e-6]");
}

namespace {

// Laguerre value/derivative at x via the three-term recurrence, renormalised
// whenever magnitudes blow up; the decimal exponent is carried separately so
// orders in the hundreds (largest nodes near 4n) stay representable.
struct ScaledLaguerre {
  double pn = 0.0;    // L_n(x) * 10^-exp10
  double pn1 = 0.0;   // L_{n+1}(x) * 10^-exp10
  double exp10 = 0.0;
};

ScaledLaguerre laguerre_eval(int n, double x) {
  double pm1 = 1.0, p = 1.0 - x, e = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
    const double mag = std::abs(p);
    if (mag > 1e250) {
      p *= 1e-250;
      pm1 *= 1e-250;
      e += 250.0;
    } else if (mag > 0.0 && mag < 1e-250) {
      p *= 1e250;
      pm1 *= 1e250;
      e -= 250.0;
    }
  }
  // after the loop: pm1 = L_n, p = L_{n+1}
  ScaledLaguerre out;
  out.pn = pm1;
  out.pn1 = p;
  out.exp10 = e;
  return out;
}

GaussLaguerreRule build_rule(int n) {
  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double z = 0.0, z_prev = 0.0;
  for (int i = 0; i < n; ++i) {
    // Stroud-Secrest style initial guesses.
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z_prev = z;
      z = z + 15.0 / (1.0 + 2.5 * n);
    } else {
      const double step = (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1));
      const double nz = z + step * (z - z_prev);
      z_prev = z;
      z = nz;
    }
    ScaledLaguerre lv;
    bool converged = false;
    double prev_step = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 200; ++iter) {
      lv = laguerre_eval(n, z);
      // L_n'(z) = n (L_n(z) - L_{n-1}(z)) / z, with L_{n-1} recovered from the
      // recurrence: (n+1) L_{n+1} = (2n+1-z) L_n - n L_{n-1}.
      const double lnm1 = ((2.0 * n + 1.0 - z) * lv.pn - (n + 1.0) * lv.pn1) / n;
      const double dpn = n * (lv.pn - lnm1) / z;
      const double dz = lv.pn / dpn;
      z -= dz;
      // done when the step hits machine noise: either tiny outright, or it
      // has stopped shrinking while already far below any quadrature need
      const double step = std::abs(dz);
      if (step <= 1e-14 * std::max(std::abs(z), 1.0) ||
          (iter >= 5 && step >= prev_step && step <= 1e-10 * std::max(std::abs(z), 1.0))) {
        lv = laguerre_eval(n, z);
        converged = true;
        break;
      }
      prev_step = step;
    }
    if (!converged || !(z > 0.0))
      throw ConvergenceError("gauss_laguerre: Newton iteration failed at order " +
                             std::to_string(n));
    rule.nodes[i] = z;
    // w_i = z / ((n+1)^2 L_{n+1}(z)^2); assembled in log10 so the underflow
    // of far-tail weights is graceful.
    const double log10w = std::log10(z) - 2.0 * std::log10(n + 1.0) -
                          2.0 * (std::log10(std::abs(lv.pn1)) + lv.exp10);
    rule.weights[i] = std::pow(10.0, log10w);
  }
  for (int i = 1; i < n; ++i)
    if (!(rule.nodes[i] > rule.nodes[i - 1]))
      throw ConvergenceError("gauss_laguerre: nodes not increasing at order " +
                             std::to_string(n));
  return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLaguerreRule>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<GaussLaguerreRule>(build_rule(n))).first;
  return *it->second;
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, integral, err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = (j == 7) ? f1 : f(center + dx);
    const double fsum = (j == 7) ? f1 : f1 + f2;
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.integral = resk * half;
  p.err = std::abs((resk - resg) * half);
  return p;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_intervals) {
  if (!(b > a)) throw std::invalid_argument("integrate_adaptive: requires b > a");
  std::vector<Panel> panels{gk15(f, a, b)};
  while (static_cast<int>(panels.size()) < max_intervals) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].integral;
      err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    if (err <= rel_tol * std::max(std::abs(total), 1e-300)) return total;
    const Panel split = panels[worst];
    const double mid = 0.5 * (split.a + split.b);
    if (!(mid > split.a && mid < split.b))
      throw ConvergenceError("integrate_adaptive: interval collapsed before converging");
    panels[worst] = gk15(f, split.a, mid);
    panels.push_back(gk15(f, mid, split.b));
  }
  throw ConvergenceError("integrate_adaptive: interval budget exhausted");
}

double integrate_exp_weighted(const std::function<double(double)>& f,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (spec.method == Method::GaussLaguerre) {
    auto apply = [&f](const GaussLaguerreRule& rule) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        if (rule.weights[i] > 0.0) sum += rule.weights[i] * f(rule.nodes[i]);
      return sum;
    };
    const double coarse = apply(gauss_laguerre(spec.node_count));
    const double fine = apply(gauss_laguerre(2 * spec.node_count));
    if (!(std::abs(fine - coarse) <=
          spec.rel_tolerance * std::max(std::abs(fine), 1e-300)))
      throw ConvergenceError(
          "integrate_exp_weighted: node doubling moved the result by more than "
          "rel_tolerance");
    return fine;
  }
  // Map z = u/(1-u); the exp(-z) factor keeps the transformed integrand flat
  // at u -> 1 and the z -> 0 limit of f is assumed finite.
  auto g = [&f](double u) {
    const double z = u / (1.0 - u);
    if (!(z < 745.0)) return 0.0;
    return f(z) * std::exp(-z) / ((1.0 - u) * (1.0 - u));
  };
  return integrate_adaptive(g, 0.0, 1.0, spec.rel_tolerance,
                            std::max(spec.node_count, 2000));
}

}  // namespace riscap::quadrature
