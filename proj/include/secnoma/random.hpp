#pragma once

#include <cstdint>
#include <random>

namespace secnoma {

/// SplitMix64 finalizer; used to derive independent sub-stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed of sub-stream `index` under `master`. Pure function of its inputs, so
/// work units can be scheduled in any order and still see the same numbers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Explicitly passed random stream. Uniforms are built from the raw 64-bit
/// Mersenne Twister output (not std::*_distribution, whose algorithms are
/// implementation-defined) so the sequence is reproducible elsewhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential with the given rate (mean 1/rate), by inverse transform.
  double exponential(double rate = 1.0);

  /// Independent child stream; consumes one draw from this stream.
  Rng split(std::uint64_t index = 0) { return Rng(derive_seed(next_u64(), index)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace secnoma
