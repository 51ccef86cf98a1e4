#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/preclusion.hpp"

using namespace fmplab;

namespace {
int brute_value(const Graph& g) {
  return *fmp_bruteforce(g, g.min_degree()).value;
}
}  // namespace

TEST_CASE("fmp on fixed graphs") {
  REQUIRE(fmp(complete_graph(3)).value == 1);
  REQUIRE(fmp(complete_graph(5)).value == 3);  // delete a triangle, isolate it from the rest
  REQUIRE(fmp(complete_graph(7)).value == 6);
  REQUIRE(fmp(cycle_graph(4)).value == 2);
  REQUIRE(fmp(cycle_graph(5)).value == 1);
  REQUIRE(fmp(cycle_graph(6)).value == 2);
  REQUIRE(fmp(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})).value == 0);
  REQUIRE(fmp(empty_graph(3)).value == 0);
  REQUIRE(fmp(petersen_graph()).value == 3);
}

TEST_CASE("fmp witnesses validate and brute force agrees") {
  for (const Graph& g : {complete_graph(5), cycle_graph(5), cycle_graph(6),
                         h_family(7, 2), complete_graph(6)}) {
    PreclusionResult r = fmp(g);
    REQUIRE(r.value == brute_value(g));
    if (r.value > 0) {
      REQUIRE(r.witness.has_value());
      REQUIRE_FALSE(check_fmp_witness(g, *r.witness, r.value).has_value());
      // the witness deletion genuinely destroys every fpm
      REQUIRE_FALSE(has_fpm(delete_edges(g, r.witness->t)));
    }
  }
}

TEST_CASE("fmp_at_most brackets the exact value") {
  Graph g = complete_graph(6);
  int v = fmp(g).value;
  REQUIRE(fmp_at_most(g, v));
  REQUIRE_FALSE(fmp_at_most(g, v - 1));
  REQUIRE(fmp_at_most(g, v + 3));
}

TEST_CASE("order caps are enforced") {
  REQUIRE_THROWS_AS(fmp(complete_graph(21)), ResourceLimitError);
  REQUIRE_NOTHROW(fmp(complete_graph(21), FmpOptions{21}));
  REQUIRE_THROWS_AS(fmp_bruteforce(complete_graph(12), 3), ResourceLimitError);
}

TEST_CASE("mp on fixed graphs") {
  REQUIRE(mp(complete_graph(4)) == 3);  // three pairwise disjoint perfect matchings
  REQUIRE(mp(cycle_graph(6)) == 2);
  REQUIRE(mp(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == 0);
  // odd order: an almost-perfect matching survives as long as two disjoint
  // edges do, so both vertices of the stranded pair must lose everything
  REQUIRE(mp(cycle_graph(5)) == 3);
  REQUIRE(mp(complete_graph(2)) == 1);
  REQUIRE(mp(complete_graph(3)) == 3);
}

TEST_CASE("mp never exceeds fmp on even order") {
  for (int n : {4, 6}) {
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) {
                       if (g.edge_count() > 10) return;  // keep the sweep fast
                       REQUIRE(mp(g) <= fmp(g).value);
                     });
  }
}

TEST_CASE("classification by 0, 1, at-least-2") {
  Fmp01Result zero = classify_fmp01(path_graph(3));
  REQUIRE(zero.cls == FmpClass::zero);
  REQUIRE_FALSE(check_fmp01_result(path_graph(3), zero).has_value());

  Fmp01Result one = classify_fmp01(cycle_graph(5));
  REQUIRE(one.cls == FmpClass::one);
  REQUIRE(one.critical_edge.has_value());
  REQUIRE_FALSE(check_fmp01_result(cycle_graph(5), one).has_value());

  Fmp01Result two = classify_fmp01(cycle_graph(6));
  REQUIRE(two.cls == FmpClass::at_least_two);
  REQUIRE(two.per_edge.size() == 6);
  REQUIRE_FALSE(check_fmp01_result(cycle_graph(6), two).has_value());

  SECTION("corrupted class is rejected") {
    Fmp01Result bad = two;
    bad.cls = FmpClass::one;
    REQUIRE(check_fmp01_result(cycle_graph(6), bad).has_value());
  }
}

TEST_CASE("two-phase search returns the lexicographically first witness") {
  // C6 has several optimal witnesses; re-running must give the same one
  PreclusionResult a = fmp(cycle_graph(6));
  PreclusionResult b = fmp(cycle_graph(6));
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  REQUIRE(a.witness->s.bits() == b.witness->s.bits());
  REQUIRE(a.witness->i.bits() == b.witness->i.bits());
  REQUIRE(a.witness->t.edges() == b.witness->t.edges());
}
