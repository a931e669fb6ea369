#pragma once

#include <cstdint>
#include <random>

namespace hyperinv {

/// Deterministic, platform-stable random source.
///
/// std::mt19937_64 has a fully specified output sequence; mapping to [0,1)
/// uses the top 53 bits directly instead of std::uniform_real_distribution
/// (whose algorithm the standard leaves unspecified), so streams are
/// bit-identical across implementations.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // multiply-shift; bias is negligible for the small n used here
    return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n));
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace hyperinv
