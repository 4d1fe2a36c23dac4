#include "expander/growth.hpp"

#include <algorithm>
#include <cassert>

#include "expander/error.hpp"

namespace expander {

GrowthProcess::GrowthProcess(const Graph& g, Vertex start, std::uint64_t seed)
    : graph_(&g), start_(start), rng_(make_rng(seed)) {
  if (start >= g.num_vertices()) {
    throw InvalidInput("start vertex " + std::to_string(start) + " outside a graph on " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
  state_.assign(g.num_vertices(), VertexState::unvisited);
  parent_.assign(g.num_vertices(), kNoParent);
  state_[start] = VertexState::queued;
  queue_.push_back(start);
}

Vertex GrowthProcess::step() {
  if (queue_.empty()) throw InvalidInput("growth process already finished");
  const auto pick = static_cast<std::size_t>(uniform_below(rng_, queue_.size()));
  const Vertex v = queue_[pick];
  queue_[pick] = queue_.back();
  queue_.pop_back();
  for (Vertex w : graph_->neighbors(v)) {
    if (state_[w] == VertexState::unvisited) {
      state_[w] = VertexState::queued;
      parent_[w] = v;
      queue_.push_back(w);
    }
  }
  state_[v] = VertexState::processed;
  ++processed_;
  assert(processed_ + queue_.size() <= graph_->num_vertices());
  return v;
}

std::size_t GrowthProcess::unvisited_neighbors(Vertex v) const {
  std::size_t count = 0;
  for (Vertex w : graph_->neighbors(v)) count += state_[w] == VertexState::unvisited ? 1 : 0;
  return count;
}

namespace {

GrowthSnapshot snapshot_of(const GrowthProcess& p, std::size_t t) {
  return {t, p.processed_count(), p.queued_count(), p.unvisited_count()};
}

GrowthTrajectory run(const Graph& g, Vertex start, std::uint64_t seed, std::size_t snapshot_every,
                     std::size_t total_steps, bool padded) {
  if (snapshot_every == 0) throw InvalidInput("snapshot interval must be positive");
  GrowthProcess process(g, start, seed);
  GrowthTrajectory out;
  out.n = g.num_vertices();
  out.start = start;
  out.seed = seed;
  out.snapshots.push_back(snapshot_of(process, 0));

  std::size_t t = 0;
  while (!process.finished() && (!padded || t < total_steps)) {
    process.step();
    ++t;
    if (t % snapshot_every == 0) out.snapshots.push_back(snapshot_of(process, t));
  }
  std::size_t last = t;
  if (padded) {
    if (out.snapshots.back().t != t) out.snapshots.push_back(snapshot_of(process, t));
    // Frozen tail on the same grid.
    for (std::size_t r = t + 1; r <= total_steps; ++r) {
      if (r % snapshot_every == 0 || r == total_steps) out.snapshots.push_back(snapshot_of(process, r));
    }
    last = std::max(t, total_steps);
  }
  if (out.snapshots.back().t != last) out.snapshots.push_back(snapshot_of(process, last));
  out.parent = process.parents();
  return out;
}

}  // namespace

GrowthTrajectory run_growth(const Graph& g, Vertex start, std::uint64_t seed,
                            std::size_t snapshot_every) {
  return run(g, start, seed, snapshot_every, 0, false);
}

GrowthTrajectory run_growth_padded(const Graph& g, Vertex start, std::uint64_t seed,
                                   std::size_t snapshot_every, std::size_t total_steps) {
  return run(g, start, seed, snapshot_every, total_steps, true);
}

double sample_boundary_estimate(const GrowthProcess& process, std::size_t samples,
                                std::uint64_t seed) {
  if (samples == 0) throw InvalidInput("at least one sample is required");
  const auto queue = process.queue();
  if (queue.empty()) throw InvalidInput("cannot sample an empty queue");
  Rng rng = make_rng(seed);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    total += process.unvisited_neighbors(queue[uniform_below(rng, queue.size())]);
  }
  return static_cast<double>(total) / static_cast<double>(samples) *
         static_cast<double>(queue.size());
}

std::uint64_t boundary_census(const GrowthProcess& process) {
  std::uint64_t total = 0;
  for (Vertex v : process.queue()) total += process.unvisited_neighbors(v);
  return total;
}

std::vector<NumericStep> numeric_process(std::size_t n, double d, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("numeric process needs n >= 1");
  if (!(d > 0.0 && d < static_cast<double>(n))) throw InvalidInput("numeric process needs 0 < d < n");
  Rng rng = make_rng(seed);
  const double p = d / static_cast<double>(n);
  std::vector<NumericStep> out;
  out.reserve(n);
  std::uint64_t u = n;
  for (std::size_t t = 1; t <= n; ++t) {
    u -= binomial(rng, u, p);
    out.push_back({t, static_cast<std::int64_t>(u),
                   static_cast<std::int64_t>(n) - static_cast<std::int64_t>(t) -
                       static_cast<std::int64_t>(u)});
  }
  return out;
}

}  // namespace expander
