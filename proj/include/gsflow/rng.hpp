#pragma once

#include <cstdint>
#include <random>

namespace gsflow {

/// Deterministic random source used by every seeded operation in this
/// library: the 64-bit Mersenne Twister (mt19937_64, fully specified by the
/// C++ standard) with explicit rejection sampling. Standard-library
/// distributions are implementation-defined and are deliberately not used,
/// so identical seeds reproduce identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit span
    std::uint64_t residue = (UINT64_MAX % range + 1) % range;     // 2^64 mod range
    std::uint64_t r = engine_();
    if (residue != 0) {
      std::uint64_t bound = 0 - residue;  // wraps to 2^64 - residue
      while (r >= bound) r = engine_();
    }
    return lo + static_cast<std::int64_t>(r % range);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Decorrelated child seed for stream `index` of a master seed
  /// (splitmix64 finalizer; fixed across platforms).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + splitmix64(index));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace gsflow
