#include "expander/random.hpp"

#include <cmath>
#include <limits>

namespace expander {

std::uint64_t geometric_skip(Rng& rng, double p) {
  const double u = 1.0 - uniform_unit(rng);  // (0, 1]
  const double skip = std::floor(std::log(u) / std::log1p(-p));
  if (!(skip < 0x1.0p63)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(skip);
}

std::uint64_t binomial(Rng& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  if (p > 0.5) return trials - binomial(rng, trials, 1.0 - p);
  std::uint64_t successes = 0;
  std::uint64_t position = geometric_skip(rng, p);
  while (position < trials) {
    ++successes;
    const std::uint64_t skip = geometric_skip(rng, p);
    if (skip >= trials) break;
    position += skip + 1;
  }
  return successes;
}

}  // namespace expander
