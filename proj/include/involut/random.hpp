#pragma once

#include <cstdint>
#include <random>

namespace involut {

using Rng = std::mt19937_64;

/// Seed for the index-th independent stream under a master seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi]. Rejection sampling on the raw engine output
/// keeps the stream identical across standard library implementations.
inline long uniform_int(Rng& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<long>(draw % span);
}

}  // namespace involut
