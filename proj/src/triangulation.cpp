#include "expander/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "expander/error.hpp"

namespace expander {

namespace {

constexpr int kMax = Triangulation::kMaxPolygon;

// Lexicographic numbering of the pairs (i, j), i < j, of a k-gon.
struct PairTable {
  std::array<std::array<std::uint8_t, kMax>, kMax> index{};
  std::array<Diagonal, kMax*(kMax - 1) / 2> pair{};
};

const PairTable& pair_table(int k) {
  static const auto tables = [] {
    std::array<PairTable, kMax + 1> all{};
    for (int kk = 2; kk <= kMax; ++kk) {
      int next = 0;
      for (int i = 0; i < kk; ++i) {
        for (int j = i + 1; j < kk; ++j) {
          all[kk].index[i][j] = static_cast<std::uint8_t>(next);
          all[kk].pair[next] = {i, j};
          ++next;
        }
      }
    }
    return all;
  }();
  return tables[k];
}

void set_bit(DiagonalMask& m, int bit) {
  if (bit < 64) {
    m.lo |= std::uint64_t{1} << bit;
  } else {
    m.hi |= std::uint64_t{1} << (bit - 64);
  }
}

void clear_bit(DiagonalMask& m, int bit) {
  if (bit < 64) {
    m.lo &= ~(std::uint64_t{1} << bit);
  } else {
    m.hi &= ~(std::uint64_t{1} << (bit - 64));
  }
}

bool test_bit(const DiagonalMask& m, int bit) {
  return bit < 64 ? ((m.lo >> bit) & 1U) != 0 : ((m.hi >> (bit - 64)) & 1U) != 0;
}

template <typename F>
void for_each_bit(const DiagonalMask& m, F&& f) {
  for (std::uint64_t w = m.lo; w != 0; w &= w - 1) f(std::countr_zero(w));
  for (std::uint64_t w = m.hi; w != 0; w &= w - 1) f(64 + std::countr_zero(w));
}

void check_polygon_size(int k) {
  if (k < Triangulation::kMinPolygon || k > kMax) {
    throw InvalidInput("polygon size " + std::to_string(k) + " outside supported range " +
                       std::to_string(Triangulation::kMinPolygon) + ".." + std::to_string(kMax));
  }
}

using NeighborMasks = std::array<std::uint32_t, kMax>;

NeighborMasks masks_of(int k, const DiagonalMask& mask) {
  NeighborMasks nb{};
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    nb[i] |= 1U << j;
    nb[j] |= 1U << i;
  }
  const auto& table = pair_table(k);
  for_each_bit(mask, [&](int bit) {
    const auto [i, j] = table.pair[bit];
    nb[i] |= 1U << j;
    nb[j] |= 1U << i;
  });
  return nb;
}

// Apexes of the two triangles on the diagonal (i, j): the unique common
// neighbor strictly inside (i, j) and the unique one outside it.
Diagonal partner_from_masks(const NeighborMasks& nb, int i, int j) {
  const std::uint32_t common = nb[i] & nb[j];
  const std::uint32_t inside = ((1U << j) - 1U) & ~((2U << i) - 1U);
  const std::uint32_t in_side = common & inside;
  const std::uint32_t out_side = common & ~inside & ~((1U << i) | (1U << j));
  if (in_side == 0 || out_side == 0) {
    throw InvalidInput("(" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not a diagonal of the triangulation");
  }
  const int a = std::countr_zero(in_side);
  const int b = std::countr_zero(out_side);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

bool diagonals_cross(Diagonal x, Diagonal y) {
  auto [a, b] = x;
  if (a > b) std::swap(a, b);
  const auto inside = [&](int v) { return a < v && v < b; };
  const auto outside = [&](int v) { return v < a || v > b; };
  return (inside(y.first) && outside(y.second)) || (inside(y.second) && outside(y.first));
}

std::uint64_t polygon_triangulation_count(int k) {
  if (k < 3) throw InvalidInput("a polygon needs at least 3 vertices");
  // Catalan(k - 2) via C_{n+1} = C_n * 2(2n + 1) / (n + 2), exact at every step.
  std::uint64_t c = 1;
  for (int n = 0; n < k - 2; ++n) {
    c = c * 2 * (2 * static_cast<std::uint64_t>(n) + 1) / (static_cast<std::uint64_t>(n) + 2);
  }
  return c;
}

Triangulation Triangulation::fan(int k, int apex) {
  check_polygon_size(k);
  if (apex < 0 || apex >= k) throw InvalidInput("fan apex outside the polygon");
  DiagonalMask mask;
  const auto& table = pair_table(k);
  for (int step = 2; step <= k - 2; ++step) {
    const int other = (apex + step) % k;
    set_bit(mask, table.index[std::min(apex, other)][std::max(apex, other)]);
  }
  return Triangulation(k, mask);
}

Triangulation Triangulation::from_diagonals(int k, std::span<const Diagonal> diagonals) {
  check_polygon_size(k);
  if (static_cast<int>(diagonals.size()) != k - 3) {
    throw InvalidInput("a triangulation of a " + std::to_string(k) + "-gon has " +
                       std::to_string(k - 3) + " diagonals, got " +
                       std::to_string(diagonals.size()));
  }
  const auto& table = pair_table(k);
  DiagonalMask mask;
  for (const auto& [i, j] : diagonals) {
    if (i < 0 || j >= k || j - i < 2 || (i == 0 && j == k - 1)) {
      throw InvalidInput("(" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not a diagonal of a " + std::to_string(k) + "-gon");
    }
    const int bit = table.index[i][j];
    if (test_bit(mask, bit)) throw InvalidInput("repeated diagonal");
    set_bit(mask, bit);
  }
  for (std::size_t x = 0; x < diagonals.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals.size(); ++y) {
      if (diagonals_cross(diagonals[x], diagonals[y])) throw InvalidInput("crossing diagonals");
    }
  }
  return Triangulation(k, mask);
}

std::vector<Diagonal> Triangulation::diagonals() const {
  std::vector<Diagonal> out;
  out.reserve(static_cast<std::size_t>(std::max(k_ - 3, 0)));
  const auto& table = pair_table(k_);
  for_each_bit(mask_, [&](int bit) { out.push_back(table.pair[bit]); });
  return out;
}

bool Triangulation::has_diagonal(Diagonal d) const {
  auto [i, j] = d;
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= k_ || i == j) return false;
  return test_bit(mask_, pair_table(k_).index[i][j]);
}

std::array<std::uint32_t, Triangulation::kMaxPolygon> Triangulation::neighbor_masks() const {
  return masks_of(k_, mask_);
}

Diagonal Triangulation::flip_partner(Diagonal d) const {
  if (!has_diagonal(d)) {
    throw InvalidInput("(" + std::to_string(d.first) + "," + std::to_string(d.second) +
                       ") is not a diagonal of the triangulation");
  }
  return partner_from_masks(masks_of(k_, mask_), std::min(d.first, d.second),
                            std::max(d.first, d.second));
}

Triangulation Triangulation::flip(Diagonal d) const {
  const Diagonal partner = flip_partner(d);
  const auto& table = pair_table(k_);
  DiagonalMask next = mask_;
  clear_bit(next, table.index[std::min(d.first, d.second)][std::max(d.first, d.second)]);
  set_bit(next, table.index[partner.first][partner.second]);
  return Triangulation(k_, next);
}

Triangulation Triangulation::rotated(int r) const {
  r = ((r % k_) + k_) % k_;
  const auto& table = pair_table(k_);
  DiagonalMask out;
  for_each_bit(mask_, [&](int bit) {
    const auto [i, j] = table.pair[bit];
    const int a = (i + r) % k_;
    const int b = (j + r) % k_;
    set_bit(out, table.index[std::min(a, b)][std::max(a, b)]);
  });
  return Triangulation(k_, out);
}

Triangulation Triangulation::reflected() const {
  const auto& table = pair_table(k_);
  DiagonalMask out;
  for_each_bit(mask_, [&](int bit) {
    const auto [i, j] = table.pair[bit];
    set_bit(out, table.index[k_ - 1 - j][k_ - 1 - i]);
  });
  return Triangulation(k_, out);
}

std::string Triangulation::to_string() const {
  std::string out;
  for (const auto& [i, j] : diagonals()) {
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

FlipGraph polygon_flip_graph(int k) {
  if (k < 4 || k > kMax) {
    throw InvalidInput("flip graphs are built for 4 <= k <= " + std::to_string(kMax) + ", got " +
                       std::to_string(k));
  }
  const std::uint64_t expected = polygon_triangulation_count(k);
  const auto& table = pair_table(k);

  FlipGraph out;
  out.triangulations.reserve(expected);
  std::unordered_map<DiagonalMask, Vertex, DiagonalMaskHash> index;
  index.reserve(expected);
  std::vector<Edge> edges;
  edges.reserve(expected * static_cast<std::uint64_t>(k - 3) / 2);

  const Triangulation root = Triangulation::fan(k, 0);
  out.triangulations.push_back(root);
  index.emplace(root.mask(), 0);

  for (Vertex current = 0; current < out.triangulations.size(); ++current) {
    const DiagonalMask mask = out.triangulations[current].mask();
    const NeighborMasks nb = masks_of(k, mask);
    for_each_bit(mask, [&](int bit) {
      const auto [i, j] = table.pair[bit];
      const auto [a, b] = partner_from_masks(nb, i, j);
      DiagonalMask next = mask;
      clear_bit(next, bit);
      set_bit(next, table.index[a][b]);
      const auto [it, inserted] =
          index.try_emplace(next, static_cast<Vertex>(out.triangulations.size()));
      if (inserted) out.triangulations.push_back(out.triangulations[current].flip({i, j}));
      if (current < it->second) edges.push_back({current, it->second});
    });
  }

  if (out.triangulations.size() != expected) {
    throw ConstructionError("flip graph closure found " +
                            std::to_string(out.triangulations.size()) +
                            " triangulations, expected " + std::to_string(expected));
  }
  out.graph = Graph::from_edges(out.triangulations.size(), edges);
  return out;
}

Triangulation orbit_representative(const Triangulation& t, PolygonSymmetry group) {
  Triangulation best = t;
  const int k = t.polygon_size();
  const auto consider = [&](const Triangulation& image) {
    if (image.mask() < best.mask()) best = image;
  };
  for (int r = 0; r < k; ++r) {
    const Triangulation turned = t.rotated(r);
    consider(turned);
    if (group == PolygonSymmetry::dihedral) consider(turned.reflected());
  }
  return best;
}

QuotientFlipGraph polygon_flip_quotient(int k, PolygonSymmetry group) {
  if (k < 5) throw InvalidInput("quotient flip graphs require k >= 5");
  const FlipGraph full = polygon_flip_graph(k);
  const std::size_t n = full.graph.num_vertices();

  QuotientFlipGraph out;
  std::vector<Vertex> orbit_of(n);
  std::unordered_map<DiagonalMask, Vertex, DiagonalMaskHash> orbit_index;
  for (Vertex v = 0; v < n; ++v) {
    const Triangulation rep = orbit_representative(full.triangulations[v], group);
    const auto [it, inserted] =
        orbit_index.try_emplace(rep.mask(), static_cast<Vertex>(out.representatives.size()));
    if (inserted) {
      out.representatives.push_back(rep);
      out.orbit_sizes.push_back(0);
    }
    orbit_of[v] = it->second;
    ++out.orbit_sizes[it->second];
  }

  std::vector<Edge> edges;
  for (const Edge& e : full.graph.edges()) {
    const Vertex a = orbit_of[e.u];
    const Vertex b = orbit_of[e.v];
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(out.representatives.size(), edges);
  return out;
}

}  // namespace expander
