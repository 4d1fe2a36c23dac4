#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "expander/graph.hpp"
#include "expander/triangulation.hpp"

namespace expander {

/// 2x2 matrix over Z/qZ, row-major (a b; c d).
struct ProjMatrix {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
  friend auto operator<=>(const ProjMatrix&, const ProjMatrix&) = default;
};

enum class ProjectiveGroup { psl, pgl };

ProjMatrix multiply(const ProjMatrix& x, const ProjMatrix& y, std::uint32_t q);
std::uint32_t determinant(const ProjMatrix& x, std::uint32_t q);

/// Canonical representative of the class {s * M : s != 0} in PGL(2, q):
/// the first nonzero entry is scaled to 1.
ProjMatrix canonical_pgl(const ProjMatrix& m, std::uint32_t q);

/// Canonical representative in PSL(2, q) of a matrix with square determinant:
/// scaled to determinant 1, then negated if needed so the first nonzero entry
/// is below q/2. Throws InvalidInput if the determinant is not a square.
ProjMatrix canonical_psl(const ProjMatrix& m, std::uint32_t q);

bool is_prime(std::uint64_t x);

/// Legendre symbol (a | p) for an odd prime p: 1, -1, or 0.
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// The integer quadruples (a0, a1, a2, a3) with a0^2 + a1^2 + a2^2 + a3^2 = p,
/// a0 > 0 odd and a1, a2, a3 even. For a prime p = 1 (mod 4) there are p + 1.
std::vector<std::array<int, 4>> lps_quadruples(std::uint32_t p);

struct LpsGraph {
  Graph graph;
  ProjectiveGroup group = ProjectiveGroup::psl;
  /// vertices[v] is the canonical group element of vertex v (sorted).
  std::vector<ProjMatrix> vertices;
  /// The p + 1 generators, canonicalized in `group`.
  std::vector<ProjMatrix> generators;
};

/// Lubotzky–Phillips–Sarnak Cayley graph X^{p,q}: (p+1)-regular on PSL(2, q)
/// when p is a square mod q and on PGL(2, q) (bipartite) otherwise.
///
/// Requires distinct primes p, q = 1 (mod 4) with q > 2 sqrt(p). Throws
/// InvalidInput on bad parameters and ConstructionError if the generators
/// would produce a loop or a repeated edge.
LpsGraph lps_graph(std::uint32_t p, std::uint32_t q);

/// G(n, p): every pair independently with probability p, sampled by
/// geometric skipping over the pairs in lexicographic order.
Graph erdos_renyi_gnp(std::size_t n, double p, std::uint64_t seed);

/// G(n, m): a uniform m-subset of the n(n-1)/2 pairs.
Graph erdos_renyi_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace expander
