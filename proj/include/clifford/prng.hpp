#pragma once

#include <cstdint>

namespace clifford {

/// Counter-based deterministic PRNG (splitmix64 finalizer over key+counter).
/// The same seed produces the same stream on every platform, which is what
/// makes verification reports byte-for-byte reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x9E3779B97F4A7C15ull)) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9E3779B97F4A7C15ull * counter_++); }

  /// Uniform in [-1, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1p-52 - 1.0; }

  double uniform(double lo, double hi) { return lo + (unit() + 1.0) * 0.5 * (hi - lo); }

  /// Exact binary fraction k * 2^-20 in [-1, 1].  Sums and differences of a
  /// handful of these are exact in binary64, so checks that promise bitwise
  /// equality can use them without fear of rounding.
  double dyadic() {
    auto v = static_cast<std::int64_t>(next_u64() & ((1u << 21) - 1)) - (std::int64_t{1} << 20);
    return static_cast<double>(v) * 0x1p-20;
  }

  /// Independent stream derived from this one's key.
  CounterRng split(std::uint64_t stream) const { return CounterRng(key_ ^ mix(stream)); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace clifford
