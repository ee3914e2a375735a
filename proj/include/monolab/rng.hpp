// SplitMix64 (Steele, Lea & Flood 2014) used as a counter-based generator:
// every (seed, stream, index) triple owns an independent, reproducible
// substream, so samples can be produced in any order.

#pragma once

#include <cstdint>

namespace monolab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  /// Substream for sample `index` of `stream` under `seed`.
  static constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return SplitMix64(mix64(mix64(seed ^ mix64(stream + kGoldenGamma)) + index * kGoldenGamma));
  }

  constexpr std::uint64_t next() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits. Portable, unlike
  /// std::uniform_real_distribution whose algorithm is unspecified.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

}  // namespace monolab
