#pragma once

#include <cstdint>

namespace splitq {

// SplitMix64 (Steele, Lea, Flood 2014). The algorithm is part of the
// reproducibility contract of the witness search: changing it changes
// every seeded result.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  // Independent stream for item `index` of a run seeded with `seed`:
  // state = mix(seed ^ mix(index + kGolden)).
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + kGolden)));
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform on the open interval (0, 1): 53 random bits, offset by half a
  // unit so neither end point is produced.
  constexpr double open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  constexpr double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

 private:
  std::uint64_t state_;
};

}  // namespace splitq
