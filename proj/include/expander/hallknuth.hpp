#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "expander/error.hpp"
#include "expander/random.hpp"
#include "expander/triangulation.hpp"

namespace expander {

/// A rooted tree given implicitly by its root and a children function. The
/// children order must be deterministic.
template <typename T>
concept TreeOracle = requires(const T& tree, const typename T::Node& node) {
  { tree.root() } -> std::convertible_to<typename T::Node>;
  { tree.children(node) } -> std::convertible_to<std::vector<typename T::Node>>;
};

struct ProbeResult {
  double estimate = 1.0;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

/// One Hall–Knuth probe: walk from the root choosing a uniform child at each
/// step; with branching factors c1, c2, ... along the path the estimate is
/// 1 + c1 + c1 c2 + c1 c2 c3 + ..., whose expectation is the node count.
template <TreeOracle Tree>
ProbeResult hk_probe(const Tree& tree, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  ProbeResult out;
  out.seed = seed;
  double product = 1.0;
  typename Tree::Node node = tree.root();
  for (;;) {
    auto kids = tree.children(node);
    if (kids.empty()) break;
    product *= static_cast<double>(kids.size());
    out.estimate += product;
    ++out.depth;
    node = std::move(kids[uniform_below(rng, kids.size())]);
  }
  return out;
}

struct HkEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t probes = 0;
};

/// Runs `count` probes with seeds seed, seed + 1, ..., spread over `threads`
/// workers. Results are indexed by probe, so the output does not depend on
/// the thread count.
template <TreeOracle Tree>
std::vector<ProbeResult> hk_probes(const Tree& tree, std::size_t count, std::uint64_t seed,
                                   unsigned threads = 1) {
  std::vector<ProbeResult> out(count);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = hk_probe(tree, seed + i);
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count == 0 ? 1 : count)));
  if (threads == 1) {
    work(0, count);
    return out;
  }
  {
    // Joined at the end of this scope, before `out` is returned.
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(count, w * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }
  return out;
}

/// Sample mean and its standard error over a set of probes.
HkEstimate summarize_probes(const std::vector<ProbeResult>& probes);

/// Running mean after each probe.
std::vector<double> running_means(const std::vector<ProbeResult>& probes);

template <TreeOracle Tree>
HkEstimate hk_estimate(const Tree& tree, std::size_t probes, std::uint64_t seed,
                       unsigned threads = 1) {
  if (probes == 0) throw InvalidInput("at least one probe is required");
  return summarize_probes(hk_probes(tree, probes, seed, threads));
}

/// Exact expectation of the probe estimate: the sum over root-to-leaf paths
/// of P(path) * estimate(path), by full traversal. Equals the node count.
/// Throws InvalidInput once more than `budget` nodes have been visited.
template <TreeOracle Tree>
double hk_exact_expectation(const Tree& tree, std::size_t budget = 10'000'000) {
  struct Frame {
    typename Tree::Node node;
    double probability;
    double product;
    double estimate;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.root(), 1.0, 1.0, 1.0});
  std::size_t visited = 0;
  double expectation = 0.0;
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++visited > budget) throw InvalidInput("tree exceeds the traversal budget");
    auto kids = tree.children(f.node);
    if (kids.empty()) {
      expectation += f.probability * f.estimate;
      continue;
    }
    const double c = static_cast<double>(kids.size());
    for (auto& kid : kids) {
      stack.push_back({std::move(kid), f.probability / c, f.product * c, f.estimate + f.product * c});
    }
  }
  return expectation;
}

/// Node count by full traversal, bounded by `budget`.
template <TreeOracle Tree>
std::size_t tree_size(const Tree& tree, std::size_t budget = 10'000'000) {
  std::vector<typename Tree::Node> stack{tree.root()};
  std::size_t count = 0;
  while (!stack.empty()) {
    auto node = std::move(stack.back());
    stack.pop_back();
    if (++count > budget) throw InvalidInput("tree exceeds the traversal budget");
    for (auto& kid : tree.children(node)) stack.push_back(std::move(kid));
  }
  return count;
}

/// A materialized tree over node ids 0..size-1.
class ExplicitTree {
 public:
  using Node = std::size_t;

  explicit ExplicitTree(std::vector<std::vector<Node>> children, Node root = 0)
      : children_(std::move(children)), root_(root) {}

  Node root() const { return root_; }
  std::vector<Node> children(const Node& node) const { return children_.at(node); }

 private:
  std::vector<std::vector<Node>> children_;
  Node root_;
};

/// Reverse-search spanning tree of the k-gon flip graph, rooted at the fan
/// at vertex 0. The parent of T is obtained by flipping the far edge (a, b)
/// of the first triangle (0, a, b) at vertex 0 whose far edge is a diagonal;
/// that flip adds a diagonal at 0, so rank(T) = #diagonals at 0 increases
/// strictly toward the root. Children are found by scanning T's flips.
class ReverseSearchTree {
 public:
  using Node = Triangulation;

  explicit ReverseSearchTree(int k);

  int polygon_size() const noexcept { return k_; }
  Node root() const { return Triangulation::fan(k_, 0); }
  std::vector<Node> children(const Node& node) const;
  std::optional<Node> parent(const Node& node) const;

  static int rank(const Node& node);

 private:
  int k_;
};

inline ReverseSearchTree reverse_search_tree(int k) { return ReverseSearchTree(k); }

}  // namespace expander
