#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "expander/graph.hpp"
#include "expander/random.hpp"

namespace expander {

enum class VertexState : std::uint8_t { unvisited, queued, processed };

inline constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

/// Randomized breadth-first growth: the vertex set is partitioned into
/// processed (P), queued (Q) and unvisited (U). Each step removes a uniformly
/// random vertex v from Q, moves v's unvisited neighbors into Q (in adjacency
/// order) and moves v into P. No edge ever joins P and U.
///
/// Holds a reference to the graph, which must outlive the process.
class GrowthProcess {
 public:
  GrowthProcess(const Graph& g, Vertex start, std::uint64_t seed);

  const Graph& graph() const noexcept { return *graph_; }
  Vertex start() const noexcept { return start_; }

  bool finished() const noexcept { return queue_.empty(); }

  /// Processes one vertex and returns it. Requires !finished().
  Vertex step();

  std::size_t steps() const noexcept { return processed_; }
  std::size_t processed_count() const noexcept { return processed_; }
  std::size_t queued_count() const noexcept { return queue_.size(); }
  std::size_t unvisited_count() const noexcept {
    return graph_->num_vertices() - processed_ - queue_.size();
  }

  /// Current queue contents (order is an implementation detail).
  std::span<const Vertex> queue() const noexcept { return queue_; }
  VertexState state(Vertex v) const { return state_[v]; }

  /// parents()[w] is the processed vertex that discovered w, or kNoParent
  /// for the start vertex and for vertices not yet visited.
  const std::vector<Vertex>& parents() const noexcept { return parent_; }

  /// Number of neighbors of v that are still unvisited.
  std::size_t unvisited_neighbors(Vertex v) const;

 private:
  const Graph* graph_;
  Vertex start_;
  Rng rng_;
  std::vector<VertexState> state_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> parent_;
  std::size_t processed_ = 0;
};

struct GrowthSnapshot {
  std::size_t t = 0;
  std::size_t processed = 0;
  std::size_t queued = 0;
  std::size_t unvisited = 0;

  friend bool operator==(const GrowthSnapshot&, const GrowthSnapshot&) = default;
};

struct GrowthTrajectory {
  std::size_t n = 0;
  Vertex start = 0;
  std::uint64_t seed = 0;
  std::vector<GrowthSnapshot> snapshots;
  /// Spanning tree of the explored component: parent[w] for every visited
  /// w != start, kNoParent otherwise.
  std::vector<Vertex> parent;

  friend bool operator==(const GrowthTrajectory&, const GrowthTrajectory&) = default;
};

/// Runs the process to exhaustion of the queue, recording a snapshot at t = 0,
/// every `snapshot_every` steps, and at termination.
GrowthTrajectory run_growth(const Graph& g, Vertex start, std::uint64_t seed,
                            std::size_t snapshot_every);

/// As run_growth, but the clock keeps running to `total_steps` with P, Q, U
/// frozen once the queue empties; snapshots continue on the same grid and at
/// total_steps.
GrowthTrajectory run_growth_padded(const Graph& g, Vertex start, std::uint64_t seed,
                                   std::size_t snapshot_every, std::size_t total_steps);

/// Estimate of e(U, W), W = P ∪ Q: every such edge has its W endpoint in Q,
/// so the mean unvisited-degree of `samples` queue vertices drawn uniformly
/// with replacement, times |Q|, is unbiased for it.
double sample_boundary_estimate(const GrowthProcess& process, std::size_t samples,
                                std::uint64_t seed);

/// Exact e(U, W) by summing unvisited-degrees over the whole queue.
std::uint64_t boundary_census(const GrowthProcess& process);

struct NumericStep {
  std::size_t t = 0;
  std::int64_t unvisited = 0;
  std::int64_t queued = 0;  // n - t - u_t; may become negative
};

/// The numeric process u_t = u_{t-1} - Bin(u_{t-1}, d/n), u_0 = n,
/// q_t = n - t - u_t, for t = 1..n.
std::vector<NumericStep> numeric_process(std::size_t n, double d, std::uint64_t seed);

}  // namespace expander
