#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expander/graph.hpp"

namespace expander {

/// A diagonal (i, j) of a convex polygon, 0 <= i < j <= k-1.
using Diagonal = std::pair<int, int>;

/// Bitmask over the k(k-1)/2 vertex pairs of a k-gon, bit order = lexicographic
/// order of (i, j). Used as the identity key of a triangulation.
struct DiagonalMask {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const DiagonalMask&, const DiagonalMask&) = default;
  friend auto operator<=>(const DiagonalMask& a, const DiagonalMask& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

struct DiagonalMaskHash {
  std::size_t operator()(const DiagonalMask& m) const noexcept {
    std::uint64_t h = m.lo * 0x9E3779B97F4A7C15ULL;
    h ^= (m.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// A triangulation of the convex k-gon with vertices 0..k-1, stored as its
/// k-3 pairwise non-crossing diagonals.
class Triangulation {
 public:
  static constexpr int kMinPolygon = 3;
  static constexpr int kMaxPolygon = 16;

  /// The fan of all diagonals incident to `apex`.
  static Triangulation fan(int k, int apex = 0);

  /// Validates count, range, side/diagonal distinction and non-crossing.
  static Triangulation from_diagonals(int k, std::span<const Diagonal> diagonals);

  int polygon_size() const noexcept { return k_; }
  const DiagonalMask& mask() const noexcept { return mask_; }

  /// Sorted lexicographically.
  std::vector<Diagonal> diagonals() const;
  bool has_diagonal(Diagonal d) const;

  /// Bit w of entry v is set iff v and w are joined by a side or a diagonal.
  std::array<std::uint32_t, kMaxPolygon> neighbor_masks() const;

  /// The diagonal that replaces `d` when `d` is flipped: the other diagonal
  /// of the quadrilateral formed by the two triangles on either side of `d`.
  Diagonal flip_partner(Diagonal d) const;
  Triangulation flip(Diagonal d) const;

  /// Image under i -> i + r (mod k).
  Triangulation rotated(int r) const;
  /// Image under i -> k - 1 - i.
  Triangulation reflected() const;

  /// "(i,j)(i,j)..." in sorted order.
  std::string to_string() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  Triangulation(int k, DiagonalMask mask) : k_(k), mask_(mask) {}

  int k_ = 0;
  DiagonalMask mask_;
};

/// True iff the chords (a, b) and (c, d) of a convex polygon cross in their
/// interiors, i.e. exactly one of c, d lies strictly inside the cyclic
/// interval (a, b).
bool diagonals_cross(Diagonal x, Diagonal y);

/// (1 / (k - 1)) * C(2k - 4, k - 2): the number of triangulations of a k-gon.
std::uint64_t polygon_triangulation_count(int k);

struct FlipGraph {
  Graph graph;
  /// triangulations[v] is the triangulation of vertex v.
  std::vector<Triangulation> triangulations;
};

/// Flip graph of the convex k-gon, 4 <= k <= 16. Nodes are numbered in BFS
/// order from the fan at vertex 0; each node's flips are explored in sorted
/// order of the flipped diagonal.
FlipGraph polygon_flip_graph(int k);

enum class PolygonSymmetry { cyclic, dihedral };

struct QuotientFlipGraph {
  Graph graph;
  /// Lexicographically smallest mask in each orbit.
  std::vector<Triangulation> representatives;
  std::vector<std::size_t> orbit_sizes;
};

/// Quotient of the flip graph by rotations (cyclic) or rotations and
/// reflections (dihedral), k >= 5. Flips inside an orbit and parallel
/// orbit-level edges are collapsed, so the result is simple.
QuotientFlipGraph polygon_flip_quotient(int k, PolygonSymmetry group);

/// Canonical orbit representative: the smallest mask over the group images.
Triangulation orbit_representative(const Triangulation& t, PolygonSymmetry group);

}  // namespace expander
