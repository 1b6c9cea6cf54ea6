#pragma once

#include "riscap/quadrature.hpp"
#include "riscap/types.hpp"

namespace riscap::capacity {

struct SecrecyResult {
  double capacity_d = 0.0;          // bits/s/Hz
  double capacity_e = 0.0;          // bits/s/Hz
  double secrecy_difference = 0.0;  // capacity_d - capacity_e
  double secrecy_clamped = 0.0;     // max(secrecy_difference, 0)
};

// Ergodic capacity of one link in bits/s/Hz:
//   (1/ln 2) * integral over z of (1 - M(z)) e^-z / z
// with M the SNR MGF of the link. The z->0 singularity is removable (the
// cascade means are finite) and the quadratures never evaluate z = 0.
double avg_capacity(const SystemParams& params, Link link,
                    const quadrature::QuadratureSpec& quad = {});

// Both link capacities under one quadrature spec, their signed difference,
// and the difference clamped at zero.
SecrecyResult avg_secrecy_capacity(const SystemParams& params,
                                   const quadrature::QuadratureSpec& quad = {});

}  // namespace riscap::capacity
