#pragma once

#include <optional>

namespace riscap {

// AccessPoint: the source drives the reflect-array directly and each cell's
// path to a vehicle fades as a product of two Rayleigh legs. Relay: a static
// source illuminates a building-mounted array over one Rayleigh leg, then
// each cell reaches a vehicle over a double-Rayleigh leg (three-fold cascade
// per cell).
enum class Model { AccessPoint, Relay };

enum class Link { Destination, Eavesdropper };

// Number of independent Rayleigh amplitude factors in a per-cell gain.
enum class CascadeOrder : int { Rayleigh = 1, DoubleRayleigh = 2, TripleRayleigh = 3 };

// Physical constants of one scenario. Distances in meters, powers in watts.
struct SystemParams {
  double ps_watts = 10.0;
  double n0_watts = 1.0;
  double pathloss_exp = 2.7;
  double r_d_m = 4.0;
  double r_e_m = 8.0;
  // Source-to-array distance; required by Relay, ignored by AccessPoint.
  std::optional<double> r_s_m{};
  int n_cells = 1;
  Model model = Model::AccessPoint;

  // Throws std::invalid_argument on any violated constraint.
  void validate() const;

  double link_distance(Link link) const;

  // SNR scale of the link: Ps r^-beta / N0, with the extra r_s^-beta factor
  // in the Relay model.
  double snr_scale(Link link) const;

  // Per-cell cascade order implied by the model.
  CascadeOrder cascade() const;
};

}  // namespace riscap
