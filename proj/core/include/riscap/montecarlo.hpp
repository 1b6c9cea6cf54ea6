#pragma once

#include <cstdint>

#include "riscap/rng.hpp"
#include "riscap/types.hpp"

namespace riscap::mc {

// Work is split into chunks of chunk_size samples; chunk i draws from the
// substream derived from (base_seed, i) alone, so estimates are bit-identical
// however the chunks are scheduled.
struct McConfig {
  std::int64_t sample_count = 1'000'000;
  std::uint64_t base_seed = 0;
  std::int64_t chunk_size = 65'536;

  void validate() const;  // sample_count >= 1e4, chunk_size >= 1
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(n)
  std::int64_t sample_count = 0;
};

struct SnrPair {
  double gamma_d = 0.0;
  double gamma_e = 0.0;
};

// One SNR draw per link: scale * sum over cells of the per-cell cascade
// product, with the two links drawn independently (destination first).
SnrPair simulate_snr_pair(const SystemParams& params, rng::Stream& stream);

struct SecrecyEstimate {
  McEstimate clamped;    // mean of max(log2(1+g_D) - log2(1+g_E), 0)
  McEstimate unclamped;  // mean of the signed difference
};

SecrecyEstimate estimate_secrecy(const SystemParams& params, const McConfig& cfg);

// E[exp(-z gamma_link)] estimated from SNR samples.
McEstimate estimate_mgf(const SystemParams& params, Link link, double z,
                        const McConfig& cfg);

// E[log2(1 + gamma_link)].
McEstimate estimate_capacity(const SystemParams& params, Link link,
                             const McConfig& cfg);

}  // namespace riscap::mc
