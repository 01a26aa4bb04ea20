#pragma once

#include <cstdint>

namespace bellsim {

/// SplitMix64: tiny, fast, and good enough for Monte Carlo sampling; chosen
/// over std engines so that per-sample streams can be derived by direct
/// state construction.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in (0, 1]; never returns 0, so log() is safe.
  double uniform01() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Derivation rule for independent sub-streams: finalize
/// root + (index + 1) * golden with the SplitMix64 mixer and use the result
/// as a fresh state. Deterministic and order-free, so parallel workers get
/// identical streams regardless of scheduling.
inline std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bellsim
