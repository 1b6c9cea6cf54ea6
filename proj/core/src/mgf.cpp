#include "riscap/mgf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riscap/specfun.hpp"

namespace riscap::mgf {

double mgf_double_cell(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::domain_error("mgf_double_cell: requires finite alpha >= 0");
  if (alpha == 0.0) return 1.0;
  const double x = (alpha - 1.0) / (alpha + 1.0);
  return 4.0 / 3.0 / ((1.0 + alpha) * (1.0 + alpha)) *
         specfun::gauss_2f1(2.0, 0.5, 2.5, x);
}

double mgf_triple_cell(double zeta) {
  if (!(zeta >= 0.0) || !std::isfinite(zeta))
    throw std::domain_error("mgf_triple_cell: requires finite zeta >= 0");
  if (zeta == 0.0) return 1.0;  // analytic limit; the prefactor alone is singular
  const double w = 1.0 / (2.0 * zeta * zeta);
  if (std::isinf(w)) return 1.0;
  if (w == 0.0) return 0.0;
  return specfun::meijer_g_2332(w) / (zeta * std::sqrt(2.0 * std::numbers::pi));
}

double MgfEvaluator::operator()(double z) const {
  if (!(z >= 0.0) || !std::isfinite(z))
    throw std::domain_error("MgfEvaluator: requires finite z >= 0");
  if (z == 0.0) return 1.0;
  return std::pow(per_cell(z * scale), cell_count);
}

MgfEvaluator make_evaluator(const SystemParams& params, Link link) {
  params.validate();
  MgfEvaluator ev;
  ev.per_cell = params.model == Model::AccessPoint ? mgf_double_cell : mgf_triple_cell;
  ev.cell_count = params.n_cells;
  ev.scale = params.snr_scale(link);
  return ev;
}

double mgf_snr(const SystemParams& params, Link link, double z) {
  return make_evaluator(params, link)(z);
}

}  // namespace riscap::mgf
