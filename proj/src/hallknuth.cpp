#include "expander/hallknuth.hpp"

#include <bit>

namespace expander {

HkEstimate summarize_probes(const std::vector<ProbeResult>& probes) {
  HkEstimate out;
  out.probes = probes.size();
  if (probes.empty()) return out;
  double sum = 0.0;
  for (const auto& p : probes) sum += p.estimate;
  out.mean = sum / static_cast<double>(probes.size());
  if (probes.size() > 1) {
    double ss = 0.0;
    for (const auto& p : probes) ss += (p.estimate - out.mean) * (p.estimate - out.mean);
    const double variance = ss / static_cast<double>(probes.size() - 1);
    out.standard_error = std::sqrt(variance / static_cast<double>(probes.size()));
  }
  return out;
}

std::vector<double> running_means(const std::vector<ProbeResult>& probes) {
  std::vector<double> out;
  out.reserve(probes.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    sum += probes[i].estimate;
    out.push_back(sum / static_cast<double>(i + 1));
  }
  return out;
}

ReverseSearchTree::ReverseSearchTree(int k) : k_(k) {
  if (k < 4 || k > Triangulation::kMaxPolygon) {
    throw InvalidInput("reverse-search tree needs 4 <= k <= " +
                       std::to_string(Triangulation::kMaxPolygon));
  }
}

int ReverseSearchTree::rank(const Node& node) {
  // Vertex 0 always has its two sides (to 1 and k-1).
  return std::popcount(node.neighbor_masks()[0]) - 2;
}

std::optional<ReverseSearchTree::Node> ReverseSearchTree::parent(const Node& node) const {
  const std::uint32_t around = node.neighbor_masks()[0];
  // Consecutive neighbors a < b of vertex 0 bound the triangle (0, a, b);
  // the first pair with b - a >= 2 has a diagonal as its far edge.
  int previous = -1;
  for (std::uint32_t w = around; w != 0; w &= w - 1) {
    const int v = std::countr_zero(w);
    if (previous >= 1 && v - previous >= 2) return node.flip({previous, v});
    previous = v;
  }
  return std::nullopt;
}

std::vector<ReverseSearchTree::Node> ReverseSearchTree::children(const Node& node) const {
  std::vector<Node> out;
  for (const Diagonal& d : node.diagonals()) {
    Node next = node.flip(d);
    if (const auto p = parent(next); p && *p == node) out.push_back(std::move(next));
  }
  return out;
}

}  // namespace expander
