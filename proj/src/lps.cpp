#include <algorithm>
#include <cmath>

#include "expander/error.hpp"
#include "expander/generators.hpp"

namespace expander {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t q) {
  return static_cast<std::uint32_t>(pow_mod(x, q - 2, q));
}

std::uint32_t reduce(std::int64_t x, std::uint32_t q) {
  const std::int64_t r = x % static_cast<std::int64_t>(q);
  return static_cast<std::uint32_t>(r < 0 ? r + q : r);
}

// Smallest s with s^2 = x (mod q), or q if x is a non-residue.
std::uint32_t smallest_sqrt(std::uint32_t x, std::uint32_t q) {
  for (std::uint64_t s = 0; s < q; ++s) {
    if (s * s % q == x) return static_cast<std::uint32_t>(s);
  }
  return q;
}

ProjMatrix scale(const ProjMatrix& m, std::uint64_t s, std::uint32_t q) {
  return {static_cast<std::uint32_t>(m.a * s % q), static_cast<std::uint32_t>(m.b * s % q),
          static_cast<std::uint32_t>(m.c * s % q), static_cast<std::uint32_t>(m.d * s % q)};
}

std::uint32_t first_nonzero(const ProjMatrix& m) {
  if (m.a != 0) return m.a;
  if (m.b != 0) return m.b;
  if (m.c != 0) return m.c;
  return m.d;
}

ProjMatrix canonical(const ProjMatrix& m, ProjectiveGroup group, std::uint32_t q) {
  return group == ProjectiveGroup::psl ? canonical_psl(m, q) : canonical_pgl(m, q);
}

}  // namespace

ProjMatrix multiply(const ProjMatrix& x, const ProjMatrix& y, std::uint32_t q) {
  const auto dot = [q](std::uint64_t p0, std::uint64_t q0, std::uint64_t p1, std::uint64_t q1) {
    return static_cast<std::uint32_t>((p0 * q0 + p1 * q1) % q);
  };
  return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c),
          dot(x.c, y.b, x.d, y.d)};
}

std::uint32_t determinant(const ProjMatrix& x, std::uint32_t q) {
  const std::uint64_t ad = static_cast<std::uint64_t>(x.a) * x.d % q;
  const std::uint64_t bc = static_cast<std::uint64_t>(x.b) * x.c % q;
  return static_cast<std::uint32_t>((ad + q - bc) % q);
}

ProjMatrix canonical_pgl(const ProjMatrix& m, std::uint32_t q) {
  if (determinant(m, q) == 0) throw InvalidInput("singular matrix has no projective class");
  return scale(m, inverse_mod(first_nonzero(m), q), q);
}

ProjMatrix canonical_psl(const ProjMatrix& m, std::uint32_t q) {
  const std::uint32_t det = determinant(m, q);
  if (det == 0) throw InvalidInput("singular matrix has no projective class");
  const std::uint32_t s = smallest_sqrt(inverse_mod(det, q), q);
  if (s == q) throw InvalidInput("determinant is not a square; the class is not in PSL(2, q)");
  ProjMatrix out = scale(m, s, q);
  if (first_nonzero(out) > q / 2) out = scale(out, q - 1, q);
  return out;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t f = 2; f * f <= x; ++f) {
    if (x % f == 0) return false;
  }
  return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = reduce(a, static_cast<std::uint32_t>(p));
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<std::array<int, 4>> lps_quadruples(std::uint32_t p) {
  std::vector<std::array<int, 4>> out;
  const int bound = static_cast<int>(std::sqrt(static_cast<double>(p))) + 1;
  const int target = static_cast<int>(p);
  for (int a0 = 1; a0 <= bound; a0 += 2) {
    for (int a1 = -bound - (bound & 1); a1 <= bound; a1 += 2) {
      for (int a2 = -bound - (bound & 1); a2 <= bound; a2 += 2) {
        for (int a3 = -bound - (bound & 1); a3 <= bound; a3 += 2) {
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == target) out.push_back({a0, a1, a2, a3});
        }
      }
    }
  }
  return out;
}

LpsGraph lps_graph(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidInput("LPS parameters must both be prime");
  if (p == q) throw InvalidInput("LPS parameters must be distinct primes");
  if (p % 4 != 1 || q % 4 != 1) throw InvalidInput("LPS parameters must be 1 mod 4");
  if (static_cast<double>(q) * q <= 4.0 * p) {
    throw InvalidInput("LPS requires q > 2 sqrt(p) for a simple Cayley graph");
  }

  LpsGraph out;
  out.group = legendre_symbol(p, q) == 1 ? ProjectiveGroup::psl : ProjectiveGroup::pgl;

  const auto quads = lps_quadruples(p);
  if (quads.size() != p + 1) {
    throw ConstructionError("found " + std::to_string(quads.size()) + " generator quadruples, " +
                            "expected " + std::to_string(p + 1));
  }
  const std::uint32_t iota = smallest_sqrt(q - 1, q);
  for (const auto& [a0, a1, a2, a3] : quads) {
    const std::int64_t i = iota;
    const ProjMatrix m{reduce(a0 + i * a1, q), reduce(a2 + i * a3, q), reduce(-a2 + i * a3, q),
                       reduce(a0 - i * a1, q)};
    out.generators.push_back(canonical(m, out.group, q));
  }
  {
    std::vector<ProjMatrix> sorted = out.generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConstructionError("two LPS generators coincide in the projective group");
    }
    // The inverse of (a b; c d) is proportional to its adjugate (d -b; -c a).
    for (const ProjMatrix& s : out.generators) {
      const ProjMatrix adj{s.d, (q - s.b) % q, (q - s.c) % q, s.a};
      if (!std::binary_search(sorted.begin(), sorted.end(), canonical(adj, out.group, q))) {
        throw ConstructionError("LPS generator set is not closed under inversion");
      }
    }
  }

  // Enumerate the canonical elements directly: for PSL, determinant-1
  // matrices whose first nonzero entry is at most (q-1)/2; for PGL, invertible
  // matrices whose first nonzero entry is 1. Lexicographic loop order makes
  // the list sorted.
  const std::uint32_t half = q / 2;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          const ProjMatrix m{a, b, c, d};
          const std::uint32_t lead = first_nonzero(m);
          if (out.group == ProjectiveGroup::pgl) {
            if (lead == 1 && determinant(m, q) != 0) out.vertices.push_back(m);
          } else if (lead != 0 && lead <= half && determinant(m, q) == 1) {
            out.vertices.push_back(m);
          }
        }
      }
    }
  }
  const std::uint64_t order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
  const std::uint64_t expected = out.group == ProjectiveGroup::psl ? order / 2 : order;
  if (out.vertices.size() != expected) {
    throw ConstructionError("enumerated " + std::to_string(out.vertices.size()) +
                            " group elements, expected " + std::to_string(expected));
  }

  const auto index_of = [&](const ProjMatrix& m) {
    const auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), m);
    if (it == out.vertices.end() || *it != m) {
      throw ConstructionError("product left the group; canonicalization is inconsistent");
    }
    return static_cast<Vertex>(it - out.vertices.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(out.vertices.size() * (p + 1) / 2);
  std::vector<Vertex> targets(p + 1);
  for (Vertex v = 0; v < out.vertices.size(); ++v) {
    for (std::size_t s = 0; s < out.generators.size(); ++s) {
      targets[s] = index_of(canonical(multiply(out.vertices[v], out.generators[s], q), out.group, q));
      if (targets[s] == v) throw ConstructionError("LPS generator produces a self-loop");
      if (v < targets[s]) edges.push_back({v, targets[s]});
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
      throw ConstructionError("LPS generators produce a repeated edge");
    }
  }
  out.graph = Graph::from_edges(out.vertices.size(), edges);
  return out;
}

}  // namespace expander
