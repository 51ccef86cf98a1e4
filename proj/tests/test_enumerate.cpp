#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"

using namespace fmplab;

TEST_CASE("binomial coefficients") {
  REQUIRE(binomial(0, 0) == 1);
  REQUIRE(binomial(6, 3) == 20);
  REQUIRE(binomial(21, 5) == 20349);
  REQUIRE(binomial(45, 9) == 886163135);
  REQUIRE(binomial(5, 7) == 0);
}

TEST_CASE("labeled graph counts on 4 vertices") {
  std::uint64_t all = 0;
  enumerate_graphs(4, EnumerationOptions{{}, 4, 0, {}},
                   [&](const Graph&, std::uint64_t) { ++all; });
  REQUIRE(all == 64);  // 2^C(4,2)

  std::uint64_t with3 = 0;
  enumerate_graphs(4, EnumerationOptions{3, 4, 0, {}},
                   [&](const Graph& g, std::uint64_t) {
                     if (g.edge_count() == 3) ++with3;
                   });
  REQUIRE(with3 == 20);  // C(6,3)
}

TEST_CASE("fixed-edge-count enumeration partitions by rank") {
  // graphs on 5 vertices with exactly 4 edges: C(10,4) = 210 of them
  std::uint64_t total = binomial(10, 4);
  REQUIRE(total == 210);

  std::uint64_t whole = 0;
  enumerate_graphs_with_edge_count(5, 4, 0, {},
                                   [&](const Graph& g, std::uint64_t) {
                                     REQUIRE(g.edge_count() == 4);
                                     ++whole;
                                   });
  REQUIRE(whole == total);

  // splitting the rank space yields the same multiset of masks
  std::vector<std::uint64_t> masks_split;
  enumerate_graphs_with_edge_count(5, 4, 0, 100,
                                   [&](const Graph&, std::uint64_t m) {
                                     masks_split.push_back(m);
                                   });
  enumerate_graphs_with_edge_count(5, 4, 100, {},
                                   [&](const Graph&, std::uint64_t m) {
                                     masks_split.push_back(m);
                                   });
  std::vector<std::uint64_t> masks_whole;
  enumerate_graphs_with_edge_count(5, 4, 0, {},
                                   [&](const Graph&, std::uint64_t m) {
                                     masks_whole.push_back(m);
                                   });
  REQUIRE(masks_split == masks_whole);
}

TEST_CASE("for_each_combination visits in order and can stop early") {
  std::vector<std::vector<int>> seen;
  for_each_combination(4, 2, [&](const std::vector<int>& pick, std::uint64_t) {
    seen.push_back(pick);
    return true;
  });
  REQUIRE(seen.size() == 6);
  REQUIRE(seen.front() == std::vector<int>{0, 1});
  REQUIRE(seen.back() == std::vector<int>{2, 3});

  int visits = 0;
  for_each_combination(6, 3, [&](const std::vector<int>&, std::uint64_t) {
    return ++visits < 4;  // stop after the fourth
  });
  REQUIRE(visits == 4);
}

TEST_CASE("edge mask universe matches graph edges") {
  EdgeMaskUniverse u(5);
  REQUIRE(u.slot_count() == 10);
  Graph g = u.graph(0b1011);  // slots 0, 1, 3
  REQUIRE(g.edge_count() == 3);
  REQUIRE(u.mask_of(g) == 0b1011);
  REQUIRE_THROWS_AS(EdgeMaskUniverse(12), ResourceLimitError);
}

TEST_CASE("labeled counts by edge number") {
  REQUIRE(labeled_graph_count_with_edges(5, 4) == 210);
  REQUIRE(labeled_graph_count_with_edges(4, 0) == 1);
  REQUIRE(labeled_graph_count_with_edges(4, 7) == 0);
}
