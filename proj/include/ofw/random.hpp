#pragma once

#include <cstdint>
#include <random>

namespace ofw {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-round seed: seed xor (t * golden-ratio constant).
constexpr std::uint64_t round_seed(std::uint64_t seed, std::uint64_t t) noexcept {
  return seed ^ (t * 0x9E3779B9ULL);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(mix64(seed)); }

}  // namespace ofw
