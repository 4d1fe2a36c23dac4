#pragma once

#include <cstdint>
#include <random>

namespace expander {

// All stochastic code draws from std::mt19937_64, whose output sequence is
// fixed by the standard. The standard distributions are not (their algorithms
// are implementation-defined), so the samplers below are written out to keep
// runs bit-reproducible across toolchains.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform integer in [0, bound). `bound` must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection on the top of the range removes modulo bias.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Number of failures before the first success of a Bernoulli(p) sequence,
/// 0 < p < 1. Saturates at UINT64_MAX.
std::uint64_t geometric_skip(Rng& rng, double p);

/// Exact Binomial(trials, p) sample by geometric skipping; expected cost
/// O(trials * min(p, 1 - p) + 1).
std::uint64_t binomial(Rng& rng, std::uint64_t trials, double p);

}  // namespace expander
