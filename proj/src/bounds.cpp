#include "expander/bounds.hpp"

#include <cmath>

#include "expander/error.hpp"

namespace expander {

namespace {

void require_density(double pi) {
  if (!(pi >= 0.0 && pi <= 1.0)) throw InvalidInput("density must lie in [0, 1]");
}

}  // namespace

double structural_queue_lower(double pi, double d, double lambda) {
  require_density(pi);
  if (!(lambda >= 0.0)) throw InvalidInput("lambda must be non-negative");
  if (!(lambda < d)) throw InvalidInput("structural bound requires lambda < d");
  const double l2 = lambda * lambda * (1.0 - pi);
  const double denom = d * d * pi + l2;
  if (denom == 0.0) return 0.0;
  return 1.0 - pi - l2 / denom;
}

double beta(double pi, double d, double lambda) {
  require_density(pi);
  if (!(d > 1.0)) throw InvalidInput("beta requires d > 1");
  if (!(lambda >= 0.0 && lambda <= d)) throw InvalidInput("beta requires 0 <= lambda <= d");
  return 1.0 - pi - std::exp(-(d - lambda) * (1.0 + 1.0 / (d - 1.0)) * pi);
}

SizeInterval vertex_count_bounds(double visited, double boundary, double d, double lambda) {
  if (!(visited >= 1.0)) throw InvalidInput("need at least one visited vertex");
  if (!(boundary >= 0.0)) throw InvalidInput("e(U, W) must be non-negative");
  if (!(lambda >= 0.0 && lambda < d)) throw InvalidInput("need 0 <= lambda < d");

  SizeInterval out;
  out.visited = visited;
  out.boundary = boundary;
  out.d = d;
  out.lambda = lambda;

  const double w2 = visited * visited;
  const double low_denominator = (d + lambda) * visited - boundary;
  if (!(low_denominator > 0.0)) {
    throw InvalidInput("e(U, W) exceeds (d + lambda)|W|; inputs are inconsistent");
  }
  out.lower = (d + lambda) * w2 / low_denominator;
  const double high_denominator = (d - lambda) * visited - boundary;
  if (high_denominator > 0.0) out.upper = (d - lambda) * w2 / high_denominator;
  return out;
}

double giant_component_density(double d, double tol) {
  if (!(d > 1.0)) throw InvalidInput("a giant component exists only for d > 1");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  // f(x) = 1 - x - exp(-d x), written to avoid cancellation near x = 0.
  const auto f = [d](double x) { return -std::expm1(-d * x) - x; };
  double lo = std::numeric_limits<double>::min();
  double hi = 1.0;
  // f(lo) > 0 since f'(0) = d - 1 > 0; f(1) = -exp(-d) < 0.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double er_queue_density(double pi, double d) {
  require_density(pi);
  if (!(d > 1.0)) throw InvalidInput("queue curve requires d > 1");
  if (pi < giant_component_density(d)) return 1.0 - pi - std::exp(-d * pi);
  return 0.0;
}

double expected_unvisited_density(double pi, double d) { return std::exp(-d * pi); }

}  // namespace expander
