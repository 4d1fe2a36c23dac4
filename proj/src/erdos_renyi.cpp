#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "expander/error.hpp"
#include "expander/generators.hpp"
#include "expander/random.hpp"

namespace expander {

namespace {

std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

// Walks the pairs (u, v), u < v, in lexicographic order, translating sorted
// linear ranks into edges.
class PairCursor {
 public:
  explicit PairCursor(std::size_t n) : n_(n) {}

  Edge advance_to(std::uint64_t rank) {
    while (rank >= row_start_ + row_length()) {
      row_start_ += row_length();
      ++u_;
    }
    return {static_cast<Vertex>(u_), static_cast<Vertex>(u_ + 1 + (rank - row_start_))};
  }

 private:
  std::uint64_t row_length() const { return n_ - u_ - 1; }

  std::size_t n_;
  std::size_t u_ = 0;
  std::uint64_t row_start_ = 0;
};

}  // namespace

Graph erdos_renyi_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  const std::uint64_t total = pair_count(n);
  std::vector<Edge> edges;
  PairCursor cursor(n);
  if (p == 1.0) {
    edges.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) edges.push_back(cursor.advance_to(r));
  } else if (p > 0.0) {
    Rng rng = make_rng(seed);
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total) * 1.1) + 16);
    std::uint64_t rank = geometric_skip(rng, p);
    while (rank < total) {
      edges.push_back(cursor.advance_to(rank));
      const std::uint64_t skip = geometric_skip(rng, p);
      if (skip >= total - rank) break;
      rank += skip + 1;
    }
  }
  return Graph::from_edges(n, edges);
}

Graph erdos_renyi_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t total = pair_count(n);
  if (m > total) {
    throw InvalidInput("G(n, m) with m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                       std::to_string(total));
  }
  // Floyd's sampling: for j = total - m .. total - 1 draw t in [0, j]; keep t
  // unless already chosen, in which case keep j. Every m-subset is equally likely.
  Rng rng = make_rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  PairCursor cursor(n);
  for (std::uint64_t r : ranks) edges.push_back(cursor.advance_to(r));
  return Graph::from_edges(n, edges);
}

}  // namespace expander
