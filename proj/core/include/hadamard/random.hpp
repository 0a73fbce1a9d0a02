#pragma once

#include <cstdint>
#include <random>

#include "hadamard/rational.hpp"

namespace hadamard {

// Seeded source of randomness. Bounded draws use rejection sampling on the
// raw 64-bit engine output so sequences are identical across standard
// library implementations.
class Rng {
 public:
  static constexpr std::int64_t kCoefficientBound = 1'000'000;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Uniform integer in [-kCoefficientBound, kCoefficientBound].
  Rational coefficient() { return Rational(uniform(-kCoefficientBound, kCoefficientBound)); }

  // Child generator with its own state, for handing to independent samplers.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hadamard
