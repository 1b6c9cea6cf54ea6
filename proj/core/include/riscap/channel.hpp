#pragma once

#include <vector>

#include "riscap/rng.hpp"
#include "riscap/types.hpp"

namespace riscap::channel {

// Per-cell cascade amplitudes of one link realisation. Cell phases are kept
// explicitly and pinned to zero: the array is assumed to cancel the channel
// phases exactly, so gains add coherently.
struct ChannelSample {
  std::vector<double> cell_gains;
  std::vector<double> cell_phases_rad;  // all zero by construction
};

// r^-beta. Throws std::domain_error for r <= 0 or beta <= 0.
double path_gain(double r_m, double beta);

// Amplitude density of a k-fold product of independent unit Rayleigh
// variables:
//   k=1  g exp(-g^2/2)
//   k=2  g K0(g)
//   k=3  conditional integral of the Rayleigh leg against the k=2 density
//        (the G^{3,0}_{0,3} form is the cross-check, not the default path).
double pdf_cascade(double g, CascadeOrder order);

// One draw of the k-fold amplitude product; each leg is sqrt(-2 ln U).
double sample_cascade(rng::Stream& stream, CascadeOrder order);

// All per-cell gains of one link, cascade order taken from the model.
ChannelSample sample_cells(rng::Stream& stream, const SystemParams& params);

}  // namespace riscap::channel
