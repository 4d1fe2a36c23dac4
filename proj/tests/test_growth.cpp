#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "expander/bounds.hpp"
#include "expander/error.hpp"
#include "expander/generators.hpp"
#include "expander/growth.hpp"
#include "expander/spectral.hpp"
#include "expander/triangulation.hpp"
#include "fixtures.hpp"

using namespace expander;
using namespace expander::testing;

namespace {

struct Sets {
  VertexSet p, q, u;
};

Sets sets_of(const GrowthProcess& proc) {
  const std::size_t n = proc.graph().num_vertices();
  Sets s{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    switch (proc.state(v)) {
      case VertexState::processed: s.p.insert(v); break;
      case VertexState::queued: s.q.insert(v); break;
      case VertexState::unvisited: s.u.insert(v); break;
    }
  }
  return s;
}

void expect_spanning_tree(const Graph& g, Vertex start, const std::vector<Vertex>& parent,
                          std::size_t visited) {
  std::size_t links = 0;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (parent[w] == kNoParent) continue;
    ++links;
    EXPECT_TRUE(g.has_edge(w, parent[w]));
    // Walking up reaches the root within n hops, so there is no cycle.
    Vertex x = w;
    std::size_t hops = 0;
    while (x != start && hops <= g.num_vertices()) {
      x = parent[x];
      ASSERT_NE(x, kNoParent);
      ++hops;
    }
    EXPECT_EQ(x, start);
  }
  EXPECT_EQ(parent[start], kNoParent);
  EXPECT_EQ(links, visited - 1);
}

}  // namespace

TEST(Growth, PathFromTheMiddle) {
  GrowthTrajectory tr = run_growth(path(3), 1, 7, 1);
  ASSERT_EQ(tr.snapshots.size(), 4U);
  EXPECT_EQ(tr.snapshots[0], (GrowthSnapshot{0, 0, 1, 2}));
  EXPECT_EQ(tr.snapshots[1], (GrowthSnapshot{1, 1, 2, 0}));
  EXPECT_EQ(tr.snapshots[2], (GrowthSnapshot{2, 2, 1, 0}));
  EXPECT_EQ(tr.snapshots[3], (GrowthSnapshot{3, 3, 0, 0}));
  EXPECT_EQ(tr.parent[0], 1U);
  EXPECT_EQ(tr.parent[2], 1U);
}

TEST(Growth, CompleteGraphQueueShrinksByOne) {
  const std::size_t n = 9;
  GrowthTrajectory tr = run_growth(complete(n), 4, 3, 1);
  ASSERT_EQ(tr.snapshots.size(), n + 1);
  for (std::size_t t = 1; t <= n; ++t) EXPECT_EQ(tr.snapshots[t].queued, n - t);
}

TEST(Growth, ConfinedToTheStartComponent) {
  GrowthTrajectory tr = run_growth(disjoint_triangles(), 0, 1, 1);
  EXPECT_EQ(tr.snapshots.back(), (GrowthSnapshot{3, 3, 0, 3}));
  for (Vertex v = 3; v < 6; ++v) EXPECT_EQ(tr.parent[v], kNoParent);
}

TEST(Growth, SnapshotGridIncludesStartAndEnd) {
  const Graph g = polygon_flip_graph(7).graph;
  GrowthTrajectory tr = run_growth(g, 0, 11, 10);
  EXPECT_EQ(tr.snapshots.front().t, 0U);
  EXPECT_EQ(tr.snapshots.back().t, 42U);
  for (std::size_t i = 1; i + 1 < tr.snapshots.size(); ++i) EXPECT_EQ(tr.snapshots[i].t, 10 * i);
  for (const auto& s : tr.snapshots) {
    EXPECT_EQ(s.processed + s.queued + s.unvisited, 42U);
    EXPECT_EQ(s.processed, s.t);
  }
  EXPECT_THROW(run_growth(g, 0, 1, 0), InvalidInput);
  EXPECT_THROW(run_growth(g, 42, 1, 1), InvalidInput);
}

TEST(Growth, PaddedRunFreezesAfterExhaustion) {
  GrowthTrajectory tr = run_growth_padded(disjoint_triangles(), 0, 1, 1, 6);
  ASSERT_EQ(tr.snapshots.size(), 7U);
  for (std::size_t t = 3; t <= 6; ++t) EXPECT_EQ(tr.snapshots[t], (GrowthSnapshot{t, 3, 0, 3}));

  const Graph g = petersen();
  EXPECT_EQ(run_growth_padded(g, 2, 9, 1, 10), run_growth(g, 2, 9, 1));
  GrowthTrajectory grid = run_growth_padded(disjoint_triangles(), 0, 1, 4, 10);
  std::vector<std::size_t> ts;
  for (const auto& s : grid.snapshots) ts.push_back(s.t);
  EXPECT_EQ(ts, (std::vector<std::size_t>{0, 3, 4, 8, 10}));
}

TEST(Growth, InvariantsAtEveryStep) {
  for (const Graph& g : {petersen(), polygon_flip_graph(8).graph, erdos_renyi_gnp(200, 0.02, 5)}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GrowthProcess proc(g, 0, seed);
      while (!proc.finished()) {
        Vertex v = proc.step();
        EXPECT_EQ(proc.state(v), VertexState::processed);
        Sets s = sets_of(proc);
        EXPECT_EQ(s.p.size(), proc.processed_count());
        EXPECT_EQ(s.q.size(), proc.queued_count());
        EXPECT_EQ(s.u.size(), proc.unvisited_count());
        EXPECT_EQ(s.p.size() + s.q.size() + s.u.size(), g.num_vertices());
        ASSERT_EQ(edge_count_between(g, s.p, s.u), 0U);
      }
      EXPECT_THROW(proc.step(), InvalidInput);
      const std::size_t visited = proc.processed_count();
      EXPECT_EQ(VertexSet(sets_of(proc).p), component_of(g, 0));
      expect_spanning_tree(g, 0, proc.parents(), visited);
    }
  }
}

TEST(Growth, TrajectoryTreeAndDeterminism) {
  const Graph g = erdos_renyi_gnm(2000, 3000, 17);
  GrowthTrajectory a = run_growth(g, 5, 123, 50);
  GrowthTrajectory b = run_growth(g, 5, 123, 50);
  EXPECT_EQ(a, b);
  GrowthTrajectory c = run_growth(g, 5, 124, 50);
  EXPECT_NE(a.snapshots, c.snapshots);
  expect_spanning_tree(g, 5, a.parent, a.snapshots.back().processed);
  EXPECT_EQ(a.snapshots.back().processed, component_of(g, 5).size());
}

TEST(Boundary, CensusAndSampling) {
  const Graph g = polygon_flip_graph(9).graph;
  GrowthProcess proc(g, 0, 4);
  for (int i = 0; i < 200; ++i) proc.step();
  Sets s = sets_of(proc);
  VertexSet w = s.u.complement();
  const auto exact = edge_count_between(g, s.u, w);
  EXPECT_EQ(boundary_census(proc), exact);

  double total = 0.0;
  const int reps = 4000;
  for (int r = 0; r < reps; ++r) total += sample_boundary_estimate(proc, 10, r);
  EXPECT_NEAR(total / reps, static_cast<double>(exact), 0.02 * static_cast<double>(exact));
  EXPECT_EQ(sample_boundary_estimate(proc, 10, 1), sample_boundary_estimate(proc, 10, 1));
  EXPECT_THROW(sample_boundary_estimate(proc, 0, 1), InvalidInput);
}

TEST(Boundary, EmptyUnvisitedAndEmptyQueue) {
  const Graph k6 = complete(6);
  GrowthProcess proc(k6, 0, 1);
  proc.step();
  EXPECT_EQ(proc.unvisited_count(), 0U);
  EXPECT_EQ(sample_boundary_estimate(proc, 5, 2), 0.0);
  EXPECT_EQ(boundary_census(proc), 0U);
  while (!proc.finished()) proc.step();
  EXPECT_THROW(sample_boundary_estimate(proc, 5, 2), InvalidInput);
}

TEST(StructuralBound, HoldsAtEveryStep) {
  std::vector<Graph> graphs{petersen(), cycle(5)};
  for (int k = 5; k <= 10; ++k) graphs.push_back(polygon_flip_graph(k).graph);
  for (const Graph& g : graphs) {
    const double d = static_cast<double>(g.degree(0));
    const double lambda = lambda_regular(g, 1e-9);
    const double n = static_cast<double>(g.num_vertices());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GrowthTrajectory tr = run_growth(g, static_cast<Vertex>(seed % g.num_vertices()), seed, 1);
      for (const auto& s : tr.snapshots) {
        EXPECT_GE(s.queued / n, structural_queue_lower(s.processed / n, d, lambda) - 1e-12);
      }
    }
  }
}

TEST(NumericProcess, ShapeAndLimits) {
  auto steps = numeric_process(1000, 1e-12, 1);
  ASSERT_EQ(steps.size(), 1000U);
  for (const auto& s : steps) {
    EXPECT_EQ(s.unvisited, 1000);
    EXPECT_EQ(s.queued, -static_cast<std::int64_t>(s.t));
  }
  auto run = numeric_process(500, 3.0, 2);
  EXPECT_EQ(run.front().t, 1U);
  EXPECT_EQ(run.back().t, 500U);
  for (std::size_t i = 0; i < run.size(); ++i) {
    EXPECT_EQ(run[i].queued, 500 - static_cast<std::int64_t>(run[i].t) - run[i].unvisited);
    if (i > 0) {
      EXPECT_LE(run[i].unvisited, run[i - 1].unvisited);
    }
  }
  EXPECT_EQ(numeric_process(500, 3.0, 2).back().unvisited, run.back().unvisited);
  EXPECT_THROW(numeric_process(0, 1.0, 1), InvalidInput);
  EXPECT_THROW(numeric_process(10, 10.0, 1), InvalidInput);
  EXPECT_THROW(numeric_process(10, 0.0, 1), InvalidInput);
}

TEST(NumericProcess, MeanMatchesExpectation) {
  const std::size_t n = 2000;
  const double d = 3.0;
  const int runs = 400;
  const std::size_t t = n / 2;
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double u = static_cast<double>(numeric_process(n, d, 500 + r)[t - 1].unvisited) / n;
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sum2 / runs - mean * mean) / (runs - 1));
  EXPECT_NEAR(mean, std::pow(1 - d / n, static_cast<double>(t)), 3 * se);
  EXPECT_NEAR(mean, expected_unvisited_density(0.5, d), 0.01);
}
