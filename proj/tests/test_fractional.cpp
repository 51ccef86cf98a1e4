#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "fmplab/enumerate.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"

using namespace fmplab;

TEST_CASE("rational arithmetic normalizes") {
  REQUIRE(Rational(5, 2) == Rational(10, 4));
  REQUIRE(Rational(0, 3) == Rational(0, 1));
  REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("fractional matching number on fixed graphs") {
  REQUIRE(fractional_matching_number(cycle_graph(5)) == Rational(5, 2));
  REQUIRE(fractional_matching_number(cycle_graph(7)) == Rational(7, 2));
  REQUIRE(fractional_matching_number(petersen_graph()) == Rational(5, 1));
  REQUIRE(fractional_matching_number(complete_graph(4)) == Rational(2, 1));
  // star: everything competes for the center
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  REQUIRE(fractional_matching_number(star) == Rational(1, 1));
  REQUIRE(fractional_matching_number(empty_graph(3)) == Rational(0, 1));
}

TEST_CASE("mu_f equals the deficiency formula on every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, EnumerationOptions{{}, 6, 0, {}},
                     [&](const Graph& g, std::uint64_t) {
                       REQUIRE(fractional_matching_number(g) ==
                               mu_f_by_deficiency(g));
                     });
}

TEST_CASE("fpm existence on fixed graphs") {
  REQUIRE(has_fpm(cycle_graph(5)));  // half on every edge
  REQUIRE(has_fpm(cycle_graph(4)));
  REQUIRE(has_fpm(complete_graph(3)));
  REQUIRE_FALSE(has_fpm(path_graph(3)));
  REQUIRE_FALSE(has_fpm(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  REQUIRE(has_fpm(h_family(9, 3)));
  REQUIRE_FALSE(has_fpm(empty_graph(2)));
  REQUIRE(has_fpm(Graph(0)));  // vacuously
}

TEST_CASE("subset violation witnesses isolate too many vertices") {
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto s = fpm_subset_violation(star);
  REQUIRE(s.has_value());
  REQUIRE(isolated_count(star, *s) > s->size());
  REQUIRE_FALSE(fpm_subset_violation(cycle_graph(5)).has_value());
}

TEST_CASE("partition certificates decompose into edges and odd cycles") {
  auto blocks = fpm_by_partition(h_family(7, 2));  // two pairs plus a triangle
  REQUIRE(blocks.has_value());
  int pair_blocks = 0, cycle_blocks = 0;
  for (const auto& b : *blocks) {
    if (b.vertices.size() == 2) {
      ++pair_blocks;
    } else {
      REQUIRE(b.vertices.size() % 2 == 1);
      REQUIRE(b.cycle.has_value());
      ++cycle_blocks;
    }
  }
  REQUIRE(pair_blocks == 2);
  REQUIRE(cycle_blocks == 1);
  REQUIRE_FALSE(fpm_by_partition(path_graph(5)).has_value());
}

TEST_CASE("certified fpm answers validate") {
  for (const Graph& g :
       {cycle_graph(5), cycle_graph(6), petersen_graph(), path_graph(3),
        complete_graph(7), h_family(9, 3),
        Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})}) {
    FpmResult r = has_fpm_certified(g, g.order() <= kPartitionCap);
    REQUIRE(r.has == has_fpm(g));
    REQUIRE_FALSE(check_fpm_result(g, r).has_value());
    if (r.has) {
      REQUIRE(r.certificate.has_value());
      REQUIRE(r.certificate->matching.has_value());
      // full load at every vertex
      for (int v = 0; v < g.order(); ++v)
        REQUIRE(r.certificate->matching->load_twice(v) == 2);
    } else {
      REQUIRE(r.witness.has_value());
    }
  }
}

TEST_CASE("even half-cycles are normalized to whole edges") {
  // C4 supports a fpm with halves, but extraction must return whole edges
  FpmResult r = has_fpm_certified(cycle_graph(4));
  REQUIRE(r.has);
  for (const auto& [e, tw] : r.certificate->matching->entries())
    REQUIRE(tw == 2);
}

TEST_CASE("validators reject corrupted certificates") {
  FpmResult r = has_fpm_certified(cycle_graph(5));
  REQUIRE(r.has);
  SECTION("claim flipped") {
    FpmResult bad = r;
    bad.has = false;
    bad.certificate.reset();
    REQUIRE(check_fpm_result(cycle_graph(5), bad).has_value());
  }
  SECTION("certificate against the wrong graph") {
    REQUIRE(check_fpm_result(path_graph(5), r).has_value());
  }
}
