#include <gtest/gtest.h>

#include <sstream>

#include "expander/error.hpp"
#include "expander/graph.hpp"
#include "expander/triangulation.hpp"
#include "fixtures.hpp"

using namespace expander;
using namespace expander::testing;

TEST(Graph, BuildsSortedSymmetricAdjacency) {
  Graph g = make_graph(4, {{2, 0}, {0, 1}, {3, 2}});
  EXPECT_EQ(g.num_vertices(), 4U);
  EXPECT_EQ(g.num_edges(), 3U);
  ASSERT_EQ(g.degree(0), 2U);
  EXPECT_EQ(g.neighbors(0)[0], 1U);
  EXPECT_EQ(g.neighbors(0)[1], 2U);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  std::vector<Edge> expect{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expect);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), InvalidInput);
  EXPECT_THROW(Graph::from_edges(3, dup), InvalidInput);
  EXPECT_THROW(Graph::from_edges(3, range), InvalidInput);
}

TEST(Graph, EmptyGraph) {
  Graph g;
  EXPECT_EQ(g.num_vertices(), 0U);
  EXPECT_EQ(g.num_edges(), 0U);
  EXPECT_THROW(degree_stats(g), InvalidInput);
}

TEST(VertexSet, MembershipAndComplement) {
  VertexSet s(5, {1, 3});
  EXPECT_EQ(s.size(), 2U);
  s.insert(3);
  EXPECT_EQ(s.size(), 2U);
  s.insert(4);
  s.erase(1);
  s.erase(1);
  EXPECT_EQ(s.size(), 2U);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(7));
  VertexSet c = s.complement();
  EXPECT_EQ(c.size(), 3U);
  EXPECT_TRUE(c.contains(0) && c.contains(1) && c.contains(2));
  EXPECT_THROW(s.insert(5), InvalidInput);
  EXPECT_EQ(VertexSet::from_mask(5, 0b10101), (VertexSet(5, {0, 2, 4})));
  EXPECT_EQ(VertexSet::all(3).size(), 3U);
}

TEST(EdgeCount, SmallCases) {
  Graph k3 = complete(3);
  EXPECT_EQ(edge_count_between(k3, VertexSet::all(3), VertexSet::all(3)), 6U);
  Graph e = make_graph(2, {{0, 1}});
  EXPECT_EQ(edge_count_between(e, VertexSet(2, {0}), VertexSet(2, {1})), 1U);
  Graph p = petersen();
  EXPECT_EQ(p.num_edges(), 15U);
  EXPECT_EQ(edge_count_between(p, VertexSet::all(10), VertexSet::all(10)), 30U);
}

TEST(EdgeCount, UniverseMismatchIsAnError) {
  Graph k3 = complete(3);
  EXPECT_THROW(edge_count_between(k3, VertexSet(4), VertexSet(3)), InvalidInput);
  EXPECT_THROW(volume(k3, VertexSet(2)), InvalidInput);
}

TEST(Volume, SmallCases) {
  EXPECT_EQ(volume(complete(3), VertexSet::all(3)), 6U);
  EXPECT_EQ(volume(star(3), VertexSet(4, {0})), 3U);
  Graph hex = polygon_flip_graph(6).graph;
  EXPECT_EQ(volume(hex, VertexSet::all(hex.num_vertices())), 42U);
}

// Brute-force e(S, T) over the edge list, independent of the CSR walk.
static std::uint64_t naive_e(const Graph& g, const VertexSet& s, const VertexSet& t) {
  std::uint64_t c = 0;
  for (const Edge& e : g.edges()) {
    c += (s.contains(e.u) && t.contains(e.v)) ? 1 : 0;
    c += (s.contains(e.v) && t.contains(e.u)) ? 1 : 0;
  }
  return c;
}

TEST(EdgeCount, IdentitiesOverAllSubsetPairs) {
  for (const Graph& g : {petersen(), path(5), star(4), from_pair_bits(6, 0x5A3C)}) {
    const std::size_t n = g.num_vertices();
    const VertexSet all = VertexSet::all(n);
    const auto two_m = 2 * g.num_edges();
    EXPECT_EQ(edge_count_between(g, all, all), two_m);
    for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
      VertexSet s = VertexSet::from_mask(n, a);
      EXPECT_EQ(edge_count_between(g, s, all), volume(g, s));
      VertexSet t = s.complement();
      EXPECT_EQ(edge_count_between(g, s, s) + edge_count_between(g, t, t) +
                    2 * edge_count_between(g, s, t),
                two_m);
      // Symmetry and the naive count on a spread of second sets.
      for (std::uint64_t b = a % 7; b < (1ULL << n); b += 7) {
        VertexSet u = VertexSet::from_mask(n, b);
        const auto e = edge_count_between(g, s, u);
        EXPECT_EQ(e, edge_count_between(g, u, s));
        EXPECT_EQ(e, naive_e(g, s, u));
      }
    }
  }
}

TEST(DegreeStats, Examples) {
  DegreeStats p3 = degree_stats(path(3));
  EXPECT_DOUBLE_EQ(p3.d_bar, 4.0 / 3.0);
  EXPECT_NEAR(p3.sigma2, 2.0 / 9.0, 1e-15);
  EXPECT_EQ(p3.d_min, 1U);
  EXPECT_EQ(p3.d_max, 2U);
  EXPECT_FALSE(p3.regular);

  for (const Graph& g : {petersen(), cycle(7), complete(6)}) {
    DegreeStats s = degree_stats(g);
    EXPECT_TRUE(s.regular);
    EXPECT_EQ(s.sigma2, 0.0);
    EXPECT_EQ(s.d_bar, static_cast<double>(g.degree(0)));
  }

  QuotientFlipGraph q = polygon_flip_quotient(6, PolygonSymmetry::cyclic);
  EXPECT_DOUBLE_EQ(degree_stats(q.graph).d_bar, 2.0);
}

TEST(Connectivity, Examples) {
  Graph k4gon = polygon_flip_graph(4).graph;
  EXPECT_TRUE(is_connected(k4gon));
  EXPECT_TRUE(is_bipartite(k4gon));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_bipartite(make_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_bipartite(petersen()));
  EXPECT_EQ(component_of(disjoint_triangles(), 4), (VertexSet(6, {3, 4, 5})));
}

TEST(EdgeList, LoadsTriangle) {
  Graph g = load_edge_list("3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(g, complete(3));
}

TEST(EdgeList, SelfLoopIsRejected) {
  EXPECT_THROW(load_edge_list("2 1\n0 0\n"), InvalidInput);
}

TEST(EdgeList, RoundTripsCanonicalText) {
  const std::string text = "5 4\n0 1\n0 4\n1 2\n3 4\n";
  EXPECT_EQ(store_edge_list(load_edge_list(text)), text);
  Graph p = petersen();
  EXPECT_EQ(load_edge_list(store_edge_list(p)), p);
  std::ostringstream out;
  store_edge_list(p, out);
  std::istringstream in(out.str());
  EXPECT_EQ(load_edge_list(in), p);
}

TEST(EdgeList, AcceptsCommentsAndReversedEdges) {
  Graph g = load_edge_list("# produced by a tool\n\n3 2\n1 0\n# mid\n2 1\n");
  EXPECT_EQ(g, path(3));
}

TEST(EdgeList, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      load_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\nx y\n"), 3U);
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2U);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2U);  // missing edge: reported at the last line
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3U);  // extra edge
  EXPECT_EQ(line_of("three 1\n"), 1U);
  EXPECT_THROW(load_edge_list(""), ParseError);
  EXPECT_THROW(load_edge_list("3 2\n0 1\n1 0\n"), InvalidInput);
}
