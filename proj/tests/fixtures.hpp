#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "expander/graph.hpp"

namespace expander::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return make_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make_graph(leaves + 1, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
    e.push_back({i, i + 5});
  }
  return make_graph(10, e);
}

inline Graph disjoint_triangles() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

/// Graph on n vertices whose edges are the set bits of `bits` over the pairs
/// (i, j), i < j, in lexicographic order.
inline Graph from_pair_bits(std::size_t n, std::uint64_t bits) {
  std::vector<Edge> e;
  int b = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++b)
      if (bits >> b & 1U) e.push_back({i, j});
  return make_graph(n, e);
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

/// Eigenvalues of A (or of D^{-1/2} A D^{-1/2}), ascending, by a dense
/// symmetric solver.
inline Eigen::VectorXd dense_spectrum(const Graph& g, bool normalized) {
  Eigen::MatrixXd a = dense_adjacency(g);
  if (normalized) {
    Eigen::VectorXd s(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) s[i] = 1.0 / std::sqrt(a.row(i).sum());
    a = s.asDiagonal() * a * s.asDiagonal();
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace expander::testing
