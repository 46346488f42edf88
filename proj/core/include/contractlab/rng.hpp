#pragma once

#include <cstdint>
#include <random>

namespace contractlab {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// is pinned by the standard) and implements its own integer/real draws so
/// that results do not depend on the standard library's distribution
/// implementations. Identical seeds give identical draws everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased draw from {0, ..., bound-1} by rejection. bound >= 1.
  std::uint64_t uniform_u64(std::uint64_t bound);

  int uniform_int(int lo, int hi);  // inclusive range

  /// Uniform in [0, 1) with 53 random bits.
  double uniform_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_double() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes (seed, tags...) into an independent stream seed. splitmix64 over the
/// concatenated words; the same derivation everywhere keeps parallel solver
/// runs reproducible and order-independent.
std::uint64_t mix_seed(std::uint64_t seed);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0, std::uint64_t d = 0);

}  // namespace contractlab
