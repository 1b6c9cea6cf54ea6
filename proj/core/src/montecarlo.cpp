#include "riscap/montecarlo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "riscap/channel.hpp"

namespace riscap::mc {

void McConfig::validate() const {
  if (sample_count < 10'000)
    throw std::invalid_argument("McConfig: reported estimates need >= 1e4 samples");
  if (chunk_size < 1) throw std::invalid_argument("McConfig: chunk_size must be positive");
}

SnrPair simulate_snr_pair(const SystemParams& params, rng::Stream& stream) {
  const CascadeOrder order = params.cascade();
  auto draw = [&](Link link) {
    double sum = 0.0;
    for (int n = 0; n < params.n_cells; ++n)
      sum += channel::sample_cascade(stream, order);
    return params.snr_scale(link) * sum;
  };
  SnrPair p;
  p.gamma_d = draw(Link::Destination);
  p.gamma_e = draw(Link::Eavesdropper);
  return p;
}

namespace {

// Chunked accumulation of K statistics of the SNR pair. Chunk i seeds its own
// stream from (base_seed, i), partials merge in chunk order, so the result is
// a pure function of (params, cfg).
template <std::size_t K, typename Fn>
std::array<McEstimate, K> accumulate(const SystemParams& params, const McConfig& cfg,
                                     Fn&& stats) {
  params.validate();
  cfg.validate();
  std::array<double, K> sum{}, sum_sq{};
  const std::int64_t chunks = (cfg.sample_count + cfg.chunk_size - 1) / cfg.chunk_size;
  for (std::int64_t c = 0; c < chunks; ++c) {
    rng::Stream stream = rng::make_stream(rng::derive_seed(cfg.base_seed, c));
    const std::int64_t lo = c * cfg.chunk_size;
    const std::int64_t hi = std::min(lo + cfg.chunk_size, cfg.sample_count);
    std::array<double, K> part{}, part_sq{};
    for (std::int64_t i = lo; i < hi; ++i) {
      const SnrPair p = simulate_snr_pair(params, stream);
      const std::array<double, K> v = stats(p);
      for (std::size_t k = 0; k < K; ++k) {
        part[k] += v[k];
        part_sq[k] += v[k] * v[k];
      }
    }
    for (std::size_t k = 0; k < K; ++k) {
      sum[k] += part[k];
      sum_sq[k] += part_sq[k];
    }
  }
  std::array<McEstimate, K> out;
  const double n = static_cast<double>(cfg.sample_count);
  for (std::size_t k = 0; k < K; ++k) {
    out[k].mean = sum[k] / n;
    const double var = std::max(0.0, (sum_sq[k] - sum[k] * sum[k] / n) / (n - 1.0));
    out[k].std_error = std::sqrt(var / n);
    out[k].sample_count = cfg.sample_count;
  }
  return out;
}

}  // namespace

SecrecyEstimate estimate_secrecy(const SystemParams& params, const McConfig& cfg) {
  auto stats = [](const SnrPair& p) {
    const double diff = std::log2(1.0 + p.gamma_d) - std::log2(1.0 + p.gamma_e);
    return std::array<double, 2>{std::max(diff, 0.0), diff};
  };
  const auto est = accumulate<2>(params, cfg, stats);
  return SecrecyEstimate{est[0], est[1]};
}

McEstimate estimate_mgf(const SystemParams& params, Link link, double z,
                        const McConfig& cfg) {
  if (!(z >= 0.0) || !std::isfinite(z))
    throw std::invalid_argument("estimate_mgf: requires finite z >= 0");
  auto stats = [link, z](const SnrPair& p) {
    const double g = link == Link::Destination ? p.gamma_d : p.gamma_e;
    return std::array<double, 1>{std::exp(-z * g)};
  };
  return accumulate<1>(params, cfg, stats)[0];
}

McEstimate estimate_capacity(const SystemParams& params, Link link, const McConfig& cfg) {
  auto stats = [link](const SnrPair& p) {
    const double g = link == Link::Destination ? p.gamma_d : p.gamma_e;
    return std::array<double, 1>{std::log2(1.0 + g)};
  };
  return accumulate<1>(params, cfg, stats)[0];
}

}  // namespace riscap::mc
