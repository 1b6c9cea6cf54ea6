#include "riscap/capacity.hpp"

#include <cmath>
#include <numbers>

#include "riscap/mgf.hpp"

namespace riscap::capacity {

double avg_capacity(const SystemParams& params, Link link,
                    const quadrature::QuadratureSpec& quad) {
  params.validate();
  quad.validate();
  const mgf::MgfEvaluator m = mgf::make_evaluator(params, link);
  // (1 - M(z))/z has a finite z->0 limit; the rules never evaluate z = 0.
  auto integrand = [&m](double z) { return (1.0 - m(z)) / z; };
  const double integral = quadrature::integrate_exp_weighted(integrand, quad);
  return integral / std::numbers::ln2;
}

SecrecyResult avg_secrecy_capacity(const SystemParams& params,
                                   const quadrature::QuadratureSpec& quad) {
  SecrecyResult r;
  r.capacity_d = avg_capacity(params, Link::Destination, quad);
  r.capacity_e = avg_capacity(params, Link::Eavesdropper, quad);
  r.secrecy_difference = r.capacity_d - r.capacity_e;
  r.secrecy_clamped = std::max(r.secrecy_difference, 0.0);
  return r;
}

}  // namespace riscap::capacity
