#pragma once
#include <cstdint>

namespace bcl {

// SplitMix64 (Steele, Lea, Flood 2014). Small, fast, and splittable: every
// episode owns its own generators, so results are reproducible regardless of
// thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n >= 1. Rejection-free scaling is fine here:
  // n is tiny (arm counts), so the modulo bias of a 64-bit multiply is nil.
  int uniform_int(int n) {
    return static_cast<int>((static_cast<__uint128_t>(next()) *
                             static_cast<__uint128_t>(n)) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent child seed from a root seed and a purpose tag
// (arm noise, policy randomness, ...). One root seed per episode.
inline std::uint64_t substream(std::uint64_t root, std::uint64_t tag) {
  SplitMix64 g(root ^ (0xD2B74407B1CE6E93ULL * (tag + 1)));
  return g.next();
}

}  // namespace bcl
