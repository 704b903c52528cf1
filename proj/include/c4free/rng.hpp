#pragma once

#include <cstdint>
#include <random>

namespace c4free {

/// Deterministic 64-bit generator used by every randomized component.
/// Seed -> output stream is bit-reproducible within this implementation;
/// the algorithm identifier is recorded in every output artifact.
class Rng {
 public:
  static constexpr const char* kAlgoId = "mt19937_64";

  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the partial block at the top of the 2^64 range.
    const std::uint64_t cutoff = (0 - bound) % bound;  // (2^64 - bound) % bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= cutoff) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

/// SplitMix64 finalizer. Replication r of a base seed uses stream index r,
/// giving independent yet reproducible per-replication generators.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace c4free
