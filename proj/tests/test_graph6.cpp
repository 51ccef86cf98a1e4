#include <catch2/catch_amalgamated.hpp>

#include "fmplab/errors.hpp"
#include "fmplab/families.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"

using namespace fmplab;

TEST_CASE("graph6 fixed encodings") {
  REQUIRE(to_graph6(complete_graph(2)) == "A_");
  REQUIRE(to_graph6(complete_graph(3)) == "Bw");
  REQUIRE(from_graph6("A_").edge_count() == 1);
  Graph k3 = from_graph6("Bw");
  REQUIRE(k3.order() == 3);
  REQUIRE(k3.edge_count() == 3);
}

TEST_CASE("graph6 round trip across assorted graphs") {
  for (const Graph& g :
       {petersen_graph(), path_graph(6), cycle_graph(9), complete_graph(11),
        empty_graph(4), Graph(0), Graph(1), h_family(9, 3)}) {
    Graph back = from_graph6(to_graph6(g));
    REQUIRE(back.order() == g.order());
    REQUIRE(back.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) REQUIRE(back.adjacent(e.u, e.v));
  }
}

TEST_CASE("graph6 rejects malformed input") {
  REQUIRE_THROWS_AS(from_graph6(""), ParseError);
  REQUIRE_THROWS_AS(from_graph6("B"), ParseError);      // truncated body
  REQUIRE_THROWS_AS(from_graph6("B\x1f"), ParseError);  // byte below offset
  REQUIRE_THROWS_AS(from_graph6("Bww"), ParseError);    // trailing junk
}

TEST_CASE("edge list text round trip") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph back = from_edge_list(to_edge_list(g));
  REQUIRE(back.order() == 4);
  REQUIRE(back.edge_count() == 3);
  REQUIRE(back.adjacent(1, 2));
}

TEST_CASE("edge list parser reports errors") {
  REQUIRE_THROWS_AS(from_edge_list(""), ParseError);
  REQUIRE_THROWS_AS(from_edge_list("3"), ParseError);          // missing edge count
  REQUIRE_THROWS_AS(from_edge_list("3 1\n0 5\n"), ParseError); // endpoint range
  REQUIRE_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError); // fewer lines than m
}
