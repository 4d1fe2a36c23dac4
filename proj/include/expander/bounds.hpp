#pragma once

#include <cstddef>
#include <limits>

namespace expander {

/// Deterministic queue-density floor at processed density pi for any growth
/// order on a d-regular graph with second eigenvalue bound lambda < d:
///   1 - pi - lambda^2 (1 - pi) / (d^2 pi + lambda^2 (1 - pi)).
/// Defined as 0 where the fraction is 0/0 (pi = 0, lambda = 0).
double structural_queue_lower(double pi, double d, double lambda);

/// Lower bound on the expected queue density of the randomized process:
///   beta(pi, d, lambda) = 1 - pi - exp(-(d - lambda)(1 + 1/(d - 1)) pi).
/// Real-valued d > 1 is accepted (average-degree heuristic). Unclamped.
double beta(double pi, double d, double lambda);

/// Bracket on the vertex count n from a growth snapshot.
struct SizeInterval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();  // +inf when unbounded
  double visited = 0.0;                                    // |W| = |P| + |Q|
  double boundary = 0.0;                                   // e(U, W)
  double d = 0.0;
  double lambda = 0.0;

  bool upper_finite() const noexcept { return upper < std::numeric_limits<double>::infinity(); }
};

/// (d + lambda)|W|^2 / ((d + lambda)|W| - e)  <=  n  <=
/// (d - lambda)|W|^2 / ((d - lambda)|W| - e), with the upper end +inf when
/// (d - lambda)|W| <= e.
SizeInterval vertex_count_bounds(double visited, double boundary, double d, double lambda);

/// The root delta_0 in (0, 1) of 1 - x = exp(-d x), d > 1, by bisection to
/// within tol.
double giant_component_density(double d, double tol = 1e-14);

/// Asymptotic queue density of growth on the giant component of G(n, d/n):
/// 1 - pi - exp(-d pi) for pi < delta_0(d), else 0.
double er_queue_density(double pi, double d);

/// Asymptotic unvisited density exp(-d pi) of the numeric process at time
/// density pi.
double expected_unvisited_density(double pi, double d);

}  // namespace expander
