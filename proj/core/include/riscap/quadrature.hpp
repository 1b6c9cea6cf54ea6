#pragma once

#include <functional>
#include <vector>

#include "riscap/errors.hpp"

namespace riscap::quadrature {

enum class Method { GaussLaguerre, AdaptiveSemiInfinite };

struct QuadratureSpec {
  Method method = Method::GaussLaguerre;
  int node_count = 200;
  double rel_tolerance = 1e-6;

  // node_count >= 64 for Gauss-Laguerre, rel_tolerance in (0, 1e-6].
  void validate() const;
};

struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes/weights for weight exp(-z) on (0, inf); cached per order.
// Newton iteration on the scaled three-term recurrence, stable through
// order ~1000 (largest nodes carry weights that underflow to zero, which is
// the correct limit of their contribution).
const GaussLaguerreRule& gauss_laguerre(int n);

// integral of f(z) exp(-z) dz over (0, inf).
//
// GaussLaguerre evaluates the rule at node_count and 2*node_count and fails
// with ConvergenceError if the two disagree beyond rel_tolerance.
// AdaptiveSemiInfinite maps z = u/(1-u) and subdivides with Gauss-Kronrod
// 7/15 until the local error estimates meet rel_tolerance.
double integrate_exp_weighted(const std::function<double(double)>& f,
                              const QuadratureSpec& spec);

// Adaptive Gauss-Kronrod 7/15 on a finite interval, relative tolerance
// against the accumulated integral. Throws ConvergenceError when the
// interval budget runs out before the estimates settle.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_intervals = 4000);

}  // namespace riscap::quadrature
