#pragma once

#include <cstdint>
#include <random>

namespace riscap::rng {

using Stream = std::mt19937_64;

// splitmix64 finalizer; used to whiten seeds and derive substreams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream seed for (base_seed, stream_index). Depends on nothing else, so a
// chunk's random sequence is the same no matter where or when it runs.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(mix64(base) ^ mix64(index + 1));
}

inline Stream make_stream(std::uint64_t seed) { return Stream(seed); }

// Uniform draw on (0, 1]: 53 random bits, then shifted off zero.
inline double uniform_open_closed(Stream& s) {
  return static_cast<double>((s() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace riscap::rng
