#include <doctest.h>

#include "bcdom/errors.hpp"
#include "bcdom/generators.hpp"
#include "bcdom/oracles.hpp"
#include "bcdom/reduction.hpp"
#include "support/brute_force.hpp"

using namespace bcdom;
using namespace bcdom::testing;

namespace {

SetCoverInstance three_sets() { return {{1, 2, 3, 4}, {{1, 2}, {3, 4}, {1, 3}}}; }

}  // namespace

TEST_CASE("validate_intersection_one") {
  CHECK(validate_intersection_one({{1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}}));
  CHECK_FALSE(validate_intersection_one({{1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}}}));
  CHECK(validate_intersection_one({{1, 2, 3}, {{1, 2, 3}}}));

  const auto bad = find_intersection_violation({{1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}}});
  REQUIRE(bad);
  CHECK(bad->first == 0);
  CHECK(bad->second == 1);
  CHECK(bad->shared == std::vector<Element>{1, 2});
}

TEST_CASE("parse_set_cover enforces every invariant") {
  const SetCoverInstance sc = parse_set_cover(R"({"universe": [4, 3, 2, 1], "sets": [[2, 1], [3, 4], [1, 3]]})");
  CHECK(sc.universe == std::vector<Element>{1, 2, 3, 4});
  CHECK(sc.sets[0] == std::vector<Element>{1, 2});

  CHECK_THROWS_AS(parse_set_cover("not json"), ParseError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1, 2], "sets": [[1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1], "sets": [[1, 2]]})"), ValidationError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1, 2], "sets": [[1, 2], [2, 1]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1, 1], "sets": [[1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_set_cover(R"({"universe": [1], "sets": [[1, 1]]})"), ValidationError);
  try {
    parse_set_cover(R"({"universe": [1, 2, 3, 4], "sets": [[1, 2, 3], [1, 2, 4]]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("sets 0 and 1") != std::string::npos);
  }
  CHECK(parse_set_cover(to_json(sc)) == sc);
}

TEST_CASE("reduce_set_cover: vertex and edge counts") {
  SUBCASE("three sets over four elements") {
    const ReducedInstance ri = reduce_set_cover(three_sets());
    CHECK(ri.graph().num_vertices() == 9);
    CHECK(ri.graph().num_edges() == 10);
    CHECK_FALSE(has_biclique(ri.graph(), 3, 3));
  }
  SUBCASE("single singleton set") {
    const ReducedInstance ri = reduce_set_cover({{1}, {{1}}});
    CHECK(ri.graph().num_vertices() == 4);
    CHECK(ri.graph().num_edges() == 3);
  }
  SUBCASE("two overlapping pairs") {
    const ReducedInstance ri = reduce_set_cover({{1, 2, 3}, {{1, 2}, {2, 3}}});
    CHECK(ri.graph().num_vertices() == 7);
    CHECK(ri.graph().num_edges() == 7);
  }
  SUBCASE("intersection violation") {
    CHECK_THROWS_AS(reduce_set_cover({{1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}}}), ValidationError);
  }
}

TEST_CASE("reduce_set_cover: layout") {
  const ReducedInstance ri = reduce_set_cover(three_sets());
  const Graph& g = ri.graph();
  CHECK(ri.element_vertex(0) == 0);
  CHECK(ri.set_vertex(0) == 4);
  CHECK(ri.x_vertex() == 7);
  CHECK(ri.y_vertex() == 8);
  CHECK(ri.element_of(2) == Element{3});
  CHECK(ri.set_of(6) == std::size_t{2});
  CHECK_FALSE(ri.set_of(7));
  CHECK(g.degree(ri.y_vertex()) == 1);
  CHECK(g.has_edge(ri.x_vertex(), ri.y_vertex()));
  for (std::size_t p = 0; p < 3; ++p) CHECK(g.has_edge(ri.x_vertex(), ri.set_vertex(p)));
  for (std::size_t e = 0; e < 4; ++e) {
    for (std::size_t p = 0; p < 3; ++p) {
      const auto& set = ri.source().sets[p];
      const bool member = std::find(set.begin(), set.end(), ri.source().universe[e]) != set.end();
      CHECK(g.has_edge(ri.element_vertex(e), ri.set_vertex(p)) == member);
    }
  }
}

TEST_CASE("map_solution_back") {
  SUBCASE("x plus the only set") {
    const ReducedInstance ri = reduce_set_cover({{1}, {{1}}});
    CHECK(map_solution_back(ri, {ri.x_vertex(), ri.set_vertex(0)}) == std::vector<std::size_t>{0});
  }
  SUBCASE("element vertex becomes its lowest covering set") {
    const ReducedInstance ri = reduce_set_cover({{1, 2, 3}, {{1, 2}, {2, 3}}});
    // every element vertex plus x; element 2 lies in both sets
    const VertexSet d{0, 1, 2, ri.x_vertex()};
    REQUIRE(is_dominating(ri.graph(), d, VertexSet::all(7)));
    CHECK(map_solution_back(ri, d) == std::vector<std::size_t>{0, 1});

    const ReducedInstance two = reduce_set_cover({{1, 2, 3}, {{1, 2}, {3}}});
    const VertexSet d2{2, two.set_vertex(0), two.x_vertex()};
    REQUIRE(is_dominating(two.graph(), d2, VertexSet::all(7)));
    CHECK(map_solution_back(two, d2) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("y is traded for x") {
    const ReducedInstance ri = reduce_set_cover(three_sets());
    const VertexSet d{ri.set_vertex(0), ri.set_vertex(1), ri.set_vertex(2), ri.y_vertex()};
    REQUIRE(is_dominating(ri.graph(), d, VertexSet::all(9)));
    CHECK(map_solution_back(ri, d) == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("non-dominating input is a contract error") {
    const ReducedInstance ri = reduce_set_cover(three_sets());
    CHECK_THROWS_AS(map_solution_back(ri, {ri.x_vertex()}), ContractError);
  }
}

TEST_CASE("forward_solution") {
  const ReducedInstance ri = reduce_set_cover(three_sets());
  const VertexSet d = forward_solution(ri, {0, 1});
  CHECK(d == VertexSet{ri.set_vertex(0), ri.set_vertex(1), ri.x_vertex()});
  CHECK(is_dominating(ri.graph(), d, VertexSet::all(9)));

  const ReducedInstance one = reduce_set_cover({{1}, {{1}}});
  CHECK(forward_solution(one, {0}).size() == 2);

  CHECK_THROWS_AS(forward_solution(ri, {0}), ContractError);
  CHECK_THROWS_AS(forward_solution(ri, {0, 7}), ContractError);
}

TEST_CASE("reduction properties on generated families") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const SetCoverInstance sc = gen_intersection_one(6 + seed % 6, 3 + seed % 4, 3, seed);
    if (sc.sets.size() > 10) continue;
    const ReducedInstance ri = reduce_set_cover(sc);
    const Graph& g = ri.graph();
    const VertexSet all = VertexSet::all(g.num_vertices());

    const std::size_t cover_opt = brute_min_set_cover(sc);
    const OracleResult ds = exact_min_dominating_set(g, all);
    CHECK(ds.opt_size == cover_opt + 1);
    CHECK_FALSE(has_biclique(g, 3, 3));

    const auto back = map_solution_back(ri, ds.witness_set);
    CHECK(is_set_cover(sc, back));
    CHECK(back.size() <= ds.opt_size - 1);

    // forward then back never grows the cover
    std::vector<std::size_t> everything(sc.sets.size());
    for (std::size_t p = 0; p < everything.size(); ++p) everything[p] = p;
    const auto round_trip = map_solution_back(ri, forward_solution(ri, everything));
    CHECK(is_set_cover(sc, round_trip));
    CHECK(round_trip.size() <= everything.size());
  }
}
