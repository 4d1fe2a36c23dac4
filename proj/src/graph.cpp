#include "expander/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "expander/error.hpp"

namespace expander {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw InvalidInput("vertex count " + std::to_string(n) + " exceeds the 32-bit index range");
  }
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw InvalidInput("edge {" + std::to_string(a) + ", " + std::to_string(b) +
                         "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    sorted.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + ", " + std::to_string(dup->v) +
                       "}");
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : sorted) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * sorted.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Visiting edges in (u, v) order fills every list in increasing order:
  // list w first receives its smaller neighbors (as e.v == w, ascending e.u),
  // then its larger ones (as e.u == w, ascending e.v).
  for (const auto& e : sorted) {
    g.neighbors_[cursor[e.u]++] = e.v;
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> vertices)
    : member_(universe, 0) {
  for (Vertex v : vertices) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s;
  s.member_.assign(universe, 1);
  s.size_ = universe;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) {
    throw InvalidInput("mask has bits outside the universe");
  }
  VertexSet s(universe);
  for (Vertex v = 0; v < universe && v < 64; ++v) {
    if ((mask >> v) & 1U) s.insert(v);
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= member_.size()) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside a set over " +
                       std::to_string(member_.size()) + " vertices");
  }
  if (!member_[v]) {
    member_[v] = 1;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= member_.size()) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside a set over " +
                       std::to_string(member_.size()) + " vertices");
  }
  if (member_[v]) {
    member_[v] = 0;
    --size_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet c;
  c.member_.resize(member_.size());
  std::transform(member_.begin(), member_.end(), c.member_.begin(),
                 [](std::uint8_t b) -> std::uint8_t { return b ? 0 : 1; });
  c.size_ = member_.size() - size_;
  return c;
}

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    throw InvalidInput("vertex set over " + std::to_string(s.universe()) +
                       " vertices used with a graph on " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

std::uint64_t edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_universe(g, s);
  require_universe(g, t);
  // Summing over ordered adjacency pairs (u, v) with u in S, v in T counts
  // [u∈S][v∈T] + [v∈S][u∈T] for each undirected edge, which is the definition.
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!s.contains(u)) continue;
    for (Vertex v : g.neighbors(u)) count += t.contains(v) ? 1 : 0;
  }
  return count;
}

std::uint64_t volume(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  std::uint64_t vol = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (s.contains(u)) vol += g.degree(u);
  }
  return vol;
}

DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InvalidInput("degree statistics of an empty graph");
  DegreeStats st;
  st.d_min = g.degree(0);
  st.d_max = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    st.d_min = std::min(st.d_min, g.degree(v));
    st.d_max = std::max(st.d_max, g.degree(v));
  }
  st.regular = st.d_min == st.d_max;
  st.d_bar = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
  if (!st.regular) {
    double acc = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      const double dev = static_cast<double>(g.degree(v)) - st.d_bar;
      acc += dev * dev;
    }
    st.sigma2 = acc / static_cast<double>(n);
  }
  return st;
}

VertexSet component_of(const Graph& g, Vertex start) {
  if (start >= g.num_vertices()) throw InvalidInput("start vertex out of range");
  VertexSet seen(g.num_vertices());
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen.contains(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw InvalidInput("connectivity of an empty graph");
  return component_of(g, 0).size() == g.num_vertices();
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InvalidInput("bipartiteness of an empty graph");
  std::vector<std::int8_t> color(n, -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = static_cast<std::int8_t>(1 - color[u]);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Splits a line into unsigned integer tokens; throws ParseError on anything else.
std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' &&
                              *ptr != '\r')) {
      throw ParseError(line_no, "expected a non-negative integer, got \"" + std::string(line) + "\"");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph load_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (line.front() == '#') continue;

    const auto nums = parse_numbers(line, line_no);
    if (nums.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " + std::to_string(nums.size()));
    }
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      if (n > 0 && m > n * (n - 1) / 2) {
        throw ParseError(line_no, "edge count exceeds n(n-1)/2 for a simple graph");
      }
      edges.reserve(m);
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header's m");
    const auto [a, b] = std::pair{nums[0], nums[1]};
    if (a >= n || b >= n) {
      throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw InvalidInput("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                   std::to_string(a));
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing \"n m\" header");
  if (edges.size() != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_edge_list(text);
}

void store_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

std::string store_edge_list(const Graph& g) {
  std::ostringstream out;
  store_edge_list(g, out);
  return out.str();
}

}  // namespace expander
