#pragma once

#include <functional>

#include "riscap/types.hpp"

namespace riscap::mgf {

// Laplace transform E[exp(-alpha G)] of the double-Rayleigh amplitude:
//   (4/3) (1+alpha)^-2 2F1(2, 1/2; 5/2; (alpha-1)/(alpha+1)).
// alpha = 0 returns exactly 1. Throws std::domain_error for alpha < 0.
double mgf_double_cell(double alpha);

// Laplace transform E[exp(-zeta G)] of the triple cascade:
//   (1/(zeta sqrt(2 pi))) G^{3,2}_{2,3}(1/(2 zeta^2) | 0,1/2; 1/2,1/2,1/2).
// zeta = 0 returns the analytic limit 1 (the prefactor alone is singular).
double mgf_triple_cell(double zeta);

// MGF of a received SNR: per-cell transform at z*scale raised to the number
// of i.i.d. cells.
struct MgfEvaluator {
  std::function<double(double)> per_cell;
  int cell_count = 1;
  double scale = 1.0;

  double operator()(double z) const;
};

MgfEvaluator make_evaluator(const SystemParams& params, Link link);

// E[exp(-z gamma_link)] for the given scenario.
double mgf_snr(const SystemParams& params, Link link, double z);

}  // namespace riscap::mgf
