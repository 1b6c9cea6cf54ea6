#include "riscap/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "riscap/specfun.hpp"

namespace riscap {

void SystemParams::validate() const {
  if (!(ps_watts >= 0.0) || !std::isfinite(ps_watts))
    throw std::invalid_argument("SystemParams: source power must be >= 0 W");
  if (!(n0_watts > 0.0) || !std::isfinite(n0_watts))
    throw std::invalid_argument("SystemParams: noise PSD must be positive");
  if (!(pathloss_exp > 0.0) || !std::isfinite(pathloss_exp))
    throw std::invalid_argument("SystemParams: path-loss exponent must be positive");
  if (!(r_d_m > 0.0) || !(r_e_m > 0.0))
    throw std::invalid_argument("SystemParams: link distances must be positive");
  if (n_cells < 1) throw std::invalid_argument("SystemParams: need at least one cell");
  if (model == Model::Relay && (!r_s_m.has_value() || !(*r_s_m > 0.0)))
    throw std::invalid_argument("SystemParams: Relay model needs a positive r_s");
}

double SystemParams::link_distance(Link link) const {
  return link == Link::Destination ? r_d_m : r_e_m;
}

double SystemParams::snr_scale(Link link) const {
  double mu = ps_watts * channel::path_gain(link_distance(link), pathloss_exp) / n0_watts;
  if (model == Model::Relay) mu *= channel::path_gain(*r_s_m, pathloss_exp);
  return mu;
}

CascadeOrder SystemParams::cascade() const {
  return model == Model::AccessPoint ? CascadeOrder::DoubleRayleigh
                                     : CascadeOrder::TripleRayleigh;
}

namespace channel {

double path_gain(double r_m, double beta) {
  if (!(r_m > 0.0) || !std::isfinite(r_m))
    throw std::domain_error("path_gain: distance must be positive, got " +
                            std::to_string(r_m));
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("path_gain: exponent must be positive, got " +
                            std::to_string(beta));
  return std::pow(r_m, -beta);
}

namespace {

// Triple-cascade density by conditioning on the Rayleigh leg:
//   f3(g) = g * integral over u of exp(-e^{2u}/2) K0(g e^{-u})
// after x = e^u. Both tails decay doubly exponentially, so the plain
// trapezoid converges spectrally; bounds come from where either factor
// underflows.
double pdf_triple(double g) {
  const double u_hi = 0.5 * std::log(1520.0) + 0.5;
  const double u_lo = std::log(g) - std::log(760.0) - 0.5;
  const double h = 0.04;
  const int n = static_cast<int>((u_hi - u_lo) / h) + 1;
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double u = u_lo + j * h;
    const double x2 = std::exp(2.0 * u);
    if (x2 > 1520.0) break;
    const double arg = g * std::exp(-u);
    if (arg > 740.0) continue;
    const double v = std::exp(-0.5 * x2) * specfun::bessel_k0(arg);
    sum += (j == 0 || j == n) ? 0.5 * v : v;
  }
  return g * sum * h;
}

}  // namespace

double pdf_cascade(double g, CascadeOrder order) {
  if (!(g > 0.0) || !std::isfinite(g))
    throw std::domain_error("pdf_cascade: requires finite g > 0");
  switch (order) {
    case CascadeOrder::Rayleigh:
      return g * std::exp(-0.5 * g * g);
    case CascadeOrder::DoubleRayleigh:
      return g > 740.0 ? 0.0 : g * specfun::bessel_k0(g);
    case CascadeOrder::TripleRayleigh:
      return pdf_triple(g);
  }
  throw std::domain_error("pdf_cascade: unknown cascade order");
}

double sample_cascade(rng::Stream& stream, CascadeOrder order) {
  double g = 1.0;
  const int k = static_cast<int>(order);
  for (int i = 0; i < k; ++i)
    g *= std::sqrt(-2.0 * std::log(rng::uniform_open_closed(stream)));
  return g;
}

ChannelSample sample_cells(rng::Stream& stream, const SystemParams& params) {
  params.validate();
  ChannelSample s;
  s.cell_gains.resize(params.n_cells);
  s.cell_phases_rad.assign(params.n_cells, 0.0);
  for (int n = 0; n < params.n_cells; ++n)
    s.cell_gains[n] = sample_cascade(stream, params.cascade());
  return s;
}

}  // namespace channel
}  // namespace riscap
