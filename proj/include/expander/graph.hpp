#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace expander {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph in compressed adjacency (CSR) form.
///
/// Vertices are 0..n-1. Every neighbor list is sorted and free of duplicates
/// and self-loops; adjacency is symmetric, so each edge appears twice in the
/// neighbor storage and once in num_edges().
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an edge list, in either orientation. Throws
  /// InvalidInput on self-loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }

  bool has_edge(Vertex u, Vertex v) const;

  /// Each edge once as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> adjacency() const noexcept { return neighbors_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Dense membership indicator over 0..universe-1 with a cached size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vertices);

  static VertexSet all(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const { return v < member_.size() && member_[v] != 0; }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> member_;
  std::size_t size_ = 0;
};

/// Ordered incidence count e(S, T): each edge {u, v} contributes
/// [u in S][v in T] + [v in S][u in T]. An edge with both endpoints in
/// S ∩ T is therefore counted twice, so e(V, V) = 2m.
std::uint64_t edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Sum of degrees over s.
std::uint64_t volume(const Graph& g, const VertexSet& s);

struct DegreeStats {
  double d_bar = 0.0;
  double sigma2 = 0.0;  // population variance of the degree sequence
  std::size_t d_min = 0;
  std::size_t d_max = 0;
  bool regular = false;
};

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertices reachable from `start`, as a set.
VertexSet component_of(const Graph& g, Vertex start);

// Edge-list text: a line "n m" followed by m lines "u v" with u < v, sorted,
// single-space separated, newline terminated. The loader also accepts edges
// in either orientation, arbitrary whitespace, blank lines and '#' comments.
Graph load_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);
std::string store_edge_list(const Graph& g);
void store_edge_list(const Graph& g, std::ostream& out);

}  // namespace expander
