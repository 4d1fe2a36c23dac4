#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>

#include "expander/bounds.hpp"
#include "expander/error.hpp"

using namespace expander;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// 50-digit reference evaluations of the closed forms.
double big_structural(Big pi, Big d, Big lambda) {
  const Big l2 = lambda * lambda;
  return static_cast<double>(1 - pi - l2 * (1 - pi) / (d * d * pi + l2 * (1 - pi)));
}

double big_beta(Big pi, Big d, Big lambda) {
  return static_cast<double>(1 - pi - exp(-(d - lambda) * (1 + 1 / (d - 1)) * pi));
}

// Root of 1 - x - exp(-d x) on (0, 1) by bisection in 50-digit arithmetic.
Big big_delta0(Big d) {
  Big lo = Big("1e-30"), hi = 1;
  for (int i = 0; i < 200; ++i) {
    Big mid = (lo + hi) / 2;
    if (1 - mid - exp(-d * mid) > 0) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST(StructuralQueueLower, EndpointsAndErrors) {
  EXPECT_EQ(structural_queue_lower(0.0, 14, 7.1835), 0.0);
  EXPECT_NEAR(structural_queue_lower(1.0, 14, 7.1835), 0.0, 1e-15);
  EXPECT_EQ(structural_queue_lower(0.0, 3, 0.0), 0.0);
  EXPECT_THROW(structural_queue_lower(0.5, 3, 3), InvalidInput);
  EXPECT_THROW(structural_queue_lower(1.5, 3, 1), InvalidInput);
  EXPECT_THROW(structural_queue_lower(0.5, 3, -1), InvalidInput);
}

TEST(StructuralQueueLower, PinnedAgainstHighPrecision) {
  // Independent 60-digit evaluations.
  EXPECT_NEAR(structural_queue_lower(0.1, 14, 7.1835), 0.196779016339282686502981422882, 1e-12);
  EXPECT_NEAR(structural_queue_lower(0.5, 3, 2), 0.192307692307692307692307692308, 1e-12);
  for (double pi : {0.01, 0.1, 0.37, 0.5, 0.9, 0.999})
    for (double lambda : {0.5, 2.0, 7.1835}) {
      EXPECT_NEAR(structural_queue_lower(pi, 14, lambda), big_structural(pi, 14, lambda), 1e-12);
      EXPECT_LE(structural_queue_lower(pi, 14, lambda), 1 - pi);
    }
}

TEST(Beta, EndpointsAndErrors) {
  EXPECT_EQ(beta(0.0, 14, 7), 0.0);
  EXPECT_NEAR(beta(0.3, 14, 14), -0.3, 1e-15);
  EXPECT_THROW(beta(0.3, 1.0, 0.5), InvalidInput);
  EXPECT_THROW(beta(0.3, 4, 5), InvalidInput);
}

TEST(Beta, PinnedAgainstHighPrecision) {
  const double l = 2 * std::sqrt(11.5154);
  EXPECT_NEAR(beta(0.1, 12.5154, l), 0.363452252240011350327029871018, 1e-12);
  EXPECT_NEAR(beta(0.5, 12.5154, l), 0.455532585268112486789802251975, 1e-12);
  EXPECT_NEAR(beta(0.9, 12.5154, l), 0.0963146784583611640879461393104, 1e-12);
  EXPECT_NEAR(beta(0.3, 14, 7.1835), 0.589446293691101796443119943167, 1e-12);
  const Big big_l = 2 * sqrt(Big("11.5154"));
  for (double pi = 0.0; pi <= 1.0; pi += 0.0625)
    EXPECT_NEAR(beta(pi, 12.5154, l), big_beta(pi, Big("12.5154"), big_l), 1e-12);
}

TEST(Beta, MonotoneInLambdaAndBelowOneMinusPi) {
  for (double pi = 0.0; pi <= 1.0; pi += 0.05) {
    double previous = std::numeric_limits<double>::infinity();
    for (double lambda = 0.0; lambda <= 14.0; lambda += 0.5) {
      const double b = beta(pi, 14, lambda);
      EXPECT_LE(b, 1 - pi + 1e-15);
      EXPECT_LE(b, previous + 1e-15);
      previous = b;
    }
  }
}

TEST(VertexCountBounds, ReferenceInstance) {
  const double two_sqrt13 = 2 * std::sqrt(13.0);
  SizeInterval iv = vertex_count_bounds(110102, 37004.88, 14, two_sqrt13);
  EXPECT_NEAR(iv.upper, 115836.70023556952851, 1e-6);
  EXPECT_NEAR(iv.lower, 111874.68833544484772, 1e-6);
  EXPECT_TRUE(iv.upper_finite());
  EXPECT_EQ(iv.visited, 110102);
  EXPECT_EQ(iv.boundary, 37004.88);

  SizeInterval tight = vertex_count_bounds(110102, 37004.88, 14, 7.1835);
  EXPECT_NEAR(tight.upper, 115812.27392452695975, 1e-6);
  EXPECT_NEAR(tight.lower, 111877.03542484135222, 1e-6);
}

TEST(VertexCountBounds, EdgeCases) {
  SizeInterval done = vertex_count_bounds(500, 0, 6, 2);
  EXPECT_EQ(done.lower, 500);
  EXPECT_EQ(done.upper, 500);

  // (d - lambda)|W| <= e: no finite upper bound.
  SizeInterval open = vertex_count_bounds(100, 600, 14, 8);
  EXPECT_EQ(open.upper, kInf);
  EXPECT_FALSE(open.upper_finite());
  EXPECT_GT(open.lower, 100);

  EXPECT_THROW(vertex_count_bounds(0, 1, 6, 2), InvalidInput);
  EXPECT_THROW(vertex_count_bounds(10, -1, 6, 2), InvalidInput);
  EXPECT_THROW(vertex_count_bounds(10, 1, 6, 6), InvalidInput);
  EXPECT_THROW(vertex_count_bounds(10, 80, 6, 2), InvalidInput);
}

TEST(VertexCountBounds, OrderingAndMonotonicity) {
  for (double w : {10.0, 1000.0, 110102.0})
    for (double frac : {0.0, 0.05, 0.2, 0.5}) {
      const double e = frac * 6 * w;
      double prev_upper = 0, prev_lower = kInf;
      for (double lambda = 0.0; lambda < 14; lambda += 1.0) {
        SizeInterval iv = vertex_count_bounds(w, e * 14 / 6, 14, lambda);
        EXPECT_GE(iv.lower, w);
        if (iv.upper_finite()) {
          EXPECT_LE(iv.lower, iv.upper);
        }
        EXPECT_GE(iv.upper, prev_upper);
        EXPECT_LE(iv.lower, prev_lower + 1e-9);
        prev_upper = iv.upper;
        prev_lower = iv.lower;
      }
    }
}

TEST(GiantComponent, DefiningEquation) {
  for (double d : {1.5, 2.0, 4.0, 14.0}) {
    const double x = giant_component_density(d, 1e-14);
    EXPECT_LE(std::abs(1 - x - std::exp(-d * x)), 1e-12) << d;
    EXPECT_NEAR(x, static_cast<double>(big_delta0(d)), 1e-12) << d;
  }
  EXPECT_NEAR(giant_component_density(1.5), 0.582811643865811386041076010554, 1e-12);
  EXPECT_NEAR(giant_component_density(2.0), 0.796812130020020046161520937938, 1e-12);
  EXPECT_NEAR(giant_component_density(4.0), 0.980172598718221585890222838153, 1e-12);
  EXPECT_NEAR(giant_component_density(14.0), 0.999999168461600567242946663341, 1e-12);
  EXPECT_LT(giant_component_density(1.0001), 0.01);
  EXPECT_GT(giant_component_density(1.0001), 0.0);
  EXPECT_THROW(giant_component_density(1.0), InvalidInput);
  EXPECT_THROW(giant_component_density(2.0, 0.0), InvalidInput);
}

TEST(ErQueueDensity, Curve) {
  EXPECT_EQ(er_queue_density(0.0, 4), 0.0);
  EXPECT_NEAR(er_queue_density(0.5, 4), 0.364664716763387308106000505028, 1e-12);
  const double root = giant_component_density(4);
  EXPECT_NEAR(er_queue_density(std::nextafter(root, 0.0), 4), 0.0, 1e-12);
  EXPECT_EQ(er_queue_density(root, 4), 0.0);
  EXPECT_EQ(er_queue_density(0.99, 4), 0.0);
  EXPECT_THROW(er_queue_density(0.5, 1.0), InvalidInput);
  EXPECT_THROW(er_queue_density(1.5, 4.0), InvalidInput);
}

TEST(ExpectedUnvisited, Values) {
  EXPECT_EQ(expected_unvisited_density(0.0, 4), 1.0);
  EXPECT_NEAR(expected_unvisited_density(std::log(2.0) / 4, 4), 0.5, 1e-15);
  EXPECT_NEAR(expected_unvisited_density(0.25, 14), std::exp(-3.5), 1e-15);
}
