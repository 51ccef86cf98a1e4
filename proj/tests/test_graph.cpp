#include <catch2/catch_amalgamated.hpp>

#include "fmplab/graph.hpp"

using namespace fmplab;

TEST_CASE("graph construction and degrees") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(g.order() == 5);
  REQUIRE(g.edge_count() == 5);
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 0));
  REQUIRE_FALSE(g.adjacent(0, 2));
  REQUIRE(g.min_degree() == 2);
  REQUIRE(g.max_degree() == 2);

  SECTION("re-adding an edge is a no-op, self-loops are rejected") {
    g.add_edge(0, 1);
    REQUIRE(g.edge_count() == 5);
    REQUIRE_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  }
  SECTION("order outside [0, 64] is rejected") {
    REQUIRE_THROWS_AS(Graph(65), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(-1), std::invalid_argument);
    REQUIRE_NOTHROW(Graph(64));
  }
}

TEST_CASE("edges come out sorted and canonical") {
  Graph g = Graph::from_edges(4, {{3, 1}, {2, 0}, {1, 0}});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  REQUIRE((es[0].u == 0 && es[0].v == 1));
  REQUIRE((es[1].u == 0 && es[1].v == 2));
  REQUIRE((es[2].u == 1 && es[2].v == 3));
}

TEST_CASE("complement") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph c = p3.complement();
  REQUIRE(c.edge_count() == 1);
  REQUIRE(c.adjacent(0, 2));
  // complementing twice is the identity
  Graph cc = c.complement();
  REQUIRE(cc.edge_count() == p3.edge_count());
  REQUIRE(cc.adjacent(0, 1));
  REQUIRE(cc.adjacent(1, 2));
}

TEST_CASE("induced subgraph relabels downward") {
  Graph g = Graph::from_edges(5, {{0, 2}, {2, 4}, {1, 3}});
  Graph h = g.induced(VertexSet::of({0, 2, 4}));
  REQUIRE(h.order() == 3);
  REQUIRE(h.edge_count() == 2);
  REQUIRE(h.adjacent(0, 1));  // was 0-2
  REQUIRE(h.adjacent(1, 2));  // was 2-4
  REQUIRE_FALSE(h.adjacent(0, 2));
}

TEST_CASE("vertex and edge deletion") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  SECTION("delete_vertices keeps the rest intact") {
    Graph h = delete_vertices(g, VertexSet::of({1}));
    REQUIRE(h.order() == 3);
    REQUIRE(h.edge_count() == 2);  // 2-3 and 3-0 survive
  }
  SECTION("delete_edge removes exactly one edge") {
    Graph h = delete_edge(g, 2, 1);  // order of endpoints must not matter
    REQUIRE(h.edge_count() == 3);
    REQUIRE_FALSE(h.adjacent(1, 2));
    REQUIRE(h.order() == 4);
  }
  SECTION("delete_edges by set") {
    Graph h = delete_edges(g, EdgeSet({{0, 1}, {2, 3}}));
    REQUIRE(h.edge_count() == 2);
  }
}

TEST_CASE("disjoint union shifts the second operand") {
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  Graph b = Graph::from_edges(2, {{0, 1}});
  Graph u = disjoint_union(a, b);
  REQUIRE(u.order() == 5);
  REQUIRE(u.edge_count() == 4);
  REQUIRE(u.adjacent(3, 4));
  REQUIRE_FALSE(u.adjacent(2, 3));
}

TEST_CASE("component queries") {
  //  triangle + edge + isolated vertex
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  REQUIRE(component_count(g) == 3);
  REQUIRE(isolated_count(g, VertexSet{}) == 1);
  REQUIRE(odd_component_count(g, VertexSet{}) == 2);  // triangle and the singleton
  SECTION("removing vertices changes the counts") {
    REQUIRE(isolated_count(g, VertexSet::of({1})) == 1);        // only 5
    REQUIRE(odd_component_count(g, VertexSet::of({4})) == 3);   // 3 and 5 and triangle
    REQUIRE(isolated_count(g, VertexSet::of({0, 1, 2, 3, 4})) == 1);
  }
}
