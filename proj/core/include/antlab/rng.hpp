#pragma once

#include <cstdint>

namespace antlab {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: output i of stream (seed, stream) is a pure function of
/// (seed, stream, i), so runs can be generated in any order or in isolation.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed) + mix64(stream ^ 0xD1B54A32D192ED03ULL))) {}

  std::uint64_t next() { return mix64(key_ + (++counter_) * kGamma); }

  /// Uniform in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace antlab
