#pragma once

#include <cstdint>

namespace kings {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Pure integer arithmetic,
// so outputs are identical on every platform.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// The k-th output of a SplitMix64 stream started at `seed`. Random access,
/// so any element can be drawn independently of the others.
constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed + (k + 1) * kGoldenGamma);
}

/// Child seed for a (level, index) slot under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t level, std::uint64_t index) {
  return mix64(stream_at(mix64(master ^ kGoldenGamma), level) ^ stream_at(~master, index));
}

}  // namespace kings
