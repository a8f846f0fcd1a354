#pragma once

#include <cstdint>
#include <random>

namespace tailrate {

/// Uniform draw in the open interval (0, 1) with 53-bit resolution.
/// Open on both ends so inverse-CDF transforms never hit 0 or 1.
inline double uniform_open(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
}

/// Index in [0, n). Bias is O(2^-53), negligible for resampling.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
  const std::size_t i = static_cast<std::size_t>(uniform_open(gen) * static_cast<double>(n));
  return i < n ? i : n - 1;
}

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(seed ^ (a * 0x9e3779b97f4a7c15ULL)) ^ b);
}

}  // namespace tailrate
