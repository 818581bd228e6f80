#include <doctest.h>

#include "bcdom/errors.hpp"
#include "bcdom/generators.hpp"
#include "bcdom/graph.hpp"
#include "support/brute_force.hpp"

using namespace bcdom;
using bcdom::testing::path_graph;
using bcdom::testing::star_graph;

TEST_CASE("parse_graph: single edge") {
  const Graph g = parse_graph("p ds 2 1\ne 0 1");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1});
  CHECK(std::vector<Vertex>(g.neighbors(1).begin(), g.neighbors(1).end()) == std::vector<Vertex>{0});
}

TEST_CASE("parse_graph: isolated vertices only") {
  const Graph g = parse_graph("p ds 3 0");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 0);
  for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 0);
}

TEST_CASE("parse_graph: path P4") {
  const Graph g = parse_graph("p ds 4 3\ne 0 1\ne 1 2\ne 2 3");
  auto nb = g.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 2});
  CHECK(g == path_graph(4));
}

TEST_CASE("parse_graph: comments, blank lines and duplicate edges") {
  const Graph g = parse_graph("c hello\n\np ds 3 4\nc mid\ne 0 1\ne 1 0\ne 0 1\ne 2 1\n");
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph: errors") {
  SUBCASE("malformed line reports its line number") {
    try {
      parse_graph("p ds 3 2\ne 0 1\nx 1 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("bad header") { CHECK_THROWS_AS(parse_graph("p edge 3 0"), ParseError); }
  SUBCASE("missing header") { CHECK_THROWS_AS(parse_graph("c nothing\n"), ParseError); }
  SUBCASE("non-numeric id") { CHECK_THROWS_AS(parse_graph("p ds 3 1\ne 0 x"), ParseError); }
  SUBCASE("negative id") { CHECK_THROWS_AS(parse_graph("p ds 3 1\ne -1 2"), ParseError); }
  SUBCASE("id out of range") { CHECK_THROWS_AS(parse_graph("p ds 3 1\ne 0 3"), RangeError); }
  SUBCASE("self-loop") { CHECK_THROWS_AS(parse_graph("p ds 3 1\ne 1 1"), ValidationError); }
  SUBCASE("too few edge lines") { CHECK_THROWS_AS(parse_graph("p ds 3 2\ne 0 1"), ParseError); }
  SUBCASE("too many edge lines") {
    CHECK_THROWS_AS(parse_graph("p ds 3 1\ne 0 1\ne 1 2"), ParseError);
  }
}

TEST_CASE("serialize_graph: canonical order and round trip") {
  const Graph g = parse_graph("p ds 4 3\ne 3 2\ne 1 0\ne 2 0\n");
  CHECK(serialize_graph(g) == "p ds 4 3\ne 0 1\ne 0 2\ne 2 3\n");
  CHECK(parse_graph(serialize_graph(g)) == g);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph r = gen_gnp(1 + seed % 17, 0.3, seed);
    const Graph back = parse_graph(serialize_graph(r));
    CHECK(back == r);
    CHECK(serialize_graph(back) == serialize_graph(r));
  }
}

TEST_CASE("Graph::from_edges enforces invariants") {
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), RangeError);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{1, 1}}), ValidationError);
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{2, 0}, {0, 2}, {1, 2}});
  CHECK(g.num_edges() == 2);
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("closed_neighborhood") {
  CHECK(closed_neighborhood(path_graph(4), 1) == VertexSet{0, 1, 2});
  CHECK(closed_neighborhood(Graph(3), 2) == VertexSet{2});
  CHECK(closed_neighborhood(star_graph(5), 0) == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(closed_neighborhood(path_graph(4), 4), RangeError);

  const Graph g = gen_gnp(20, 0.3, 5);
  for (Vertex v = 0; v < 20; ++v) CHECK(closed_neighborhood(g, v).contains(v));
}

TEST_CASE("is_dominating") {
  const Graph p4 = path_graph(4);
  const VertexSet all = VertexSet::all(4);
  CHECK(is_dominating(p4, {1, 2}, all));
  CHECK_FALSE(is_dominating(p4, {0}, all));
  CHECK(undominated(p4, {0}, all) == VertexSet{2, 3});
  CHECK(is_dominating(p4, {}, {}));
  CHECK(is_dominating(p4, {0}, {0, 1}));
  CHECK_THROWS_AS(is_dominating(p4, {7}, all), RangeError);

  const Graph g = gen_gnp(15, 0.2, 9);
  CHECK(is_dominating(g, VertexSet::all(15), VertexSet::all(15)));
  CHECK(is_dominating(g, VertexSet::all(15), {3, 4}));
}

TEST_CASE("VertexSet normalizes") {
  const VertexSet s(std::vector<Vertex>{5, 1, 5, 3});
  CHECK(s.ids() == std::vector<Vertex>{1, 3, 5});
  VertexSet t{4};
  t.insert(2);
  t.insert(4);
  CHECK(t == VertexSet{2, 4});
  CHECK(VertexSet::all(3) == VertexSet{0, 1, 2});
}
