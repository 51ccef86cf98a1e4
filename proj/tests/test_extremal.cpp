#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "fmplab/budget.hpp"
#include "fmplab/extremal.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/preclusion.hpp"

using namespace fmplab;

TEST_CASE("exact minimum sizes at small orders") {
  SECTION("value one") {
    // two disjoint edges: losing either one strands a pair
    ExtremalRecord r4 = s_exact(4, 1);
    REQUIRE(r4.status == "proven-exact");
    REQUIRE(r4.value == 2);
    REQUIRE(r4.witness_graph6.has_value());
    Graph w = from_graph6(*r4.witness_graph6);
    REQUIRE(w.edge_count() == 2);
    REQUIRE(fmp(w).value == 1);

    ExtremalRecord r5 = s_exact(5, 1);
    REQUIRE(r5.value == 4);  // matching plus triangle

    ExtremalRecord r6 = s_exact(6, 1);
    REQUIRE(r6.value == 3);  // three disjoint edges
  }
  SECTION("value zero is attained by the edgeless graph") {
    ExtremalRecord r = s_exact(5, 0);
    REQUIRE(r.status == "proven-exact");
    REQUIRE(r.value == 0);
  }
  SECTION("value two needs minimum degree two everywhere") {
    ExtremalRecord r = s_exact(6, 2);
    REQUIRE(r.status == "proven-exact");
    REQUIRE(r.value == 6);  // a six-cycle; five edges cannot keep every degree at two
  }
  SECTION("unattainable value yields a proven-empty record") {
    ExtremalRecord r = s_exact(2, 2, {{}, 1});  // only K2, whose value is 1
    REQUIRE(r.status == "proven-empty");
    REQUIRE_FALSE(r.value.has_value());
  }
}

TEST_CASE("budget exhaustion is reported, never silently truncated") {
  SweepOptions sw;
  sw.deadline = Deadline::after_seconds(0.0);  // instantly expired
  ExtremalRecord r = s_exact(7, 1, {sw, {}});
  REQUIRE(r.status == "inconclusive");
  REQUIRE_FALSE(r.value.has_value());
  REQUIRE_FALSE(r.note.empty());
}

TEST_CASE("worker count does not change the result") {
  SweepOptions one, four;
  one.workers = 1;
  four.workers = 4;
  four.chunk = 64;  // force many chunks so scheduling could interleave
  ExtremalRecord a = s_exact(6, 1, {one, {}});
  ExtremalRecord b = s_exact(6, 1, {four, {}});
  REQUIRE(a.value == b.value);
  REQUIRE(a.witness_graph6 == b.witness_graph6);
}

TEST_CASE("edge threshold verification for forcing a given value") {
  FVerifyReport r = f_verify(7, 1);
  REQUIRE(r.complete);
  REQUIRE(r.upper_ok);
  REQUIRE(r.witness_ok);
  REQUIRE(r.record.status == "proven-exact");
  REQUIRE(r.record.value == 16);  // C(6,2) + 1
}

TEST_CASE("derived table for keeping a fractional perfect matching") {
  ExtremalRecord s = s_exact(7, 1);
  ExtremalRecord g = g_from_s(s);
  REQUIRE(g.quantity == "g");
  REQUIRE(g.k == 0);
  REQUIRE(g.value == 4);  // one less edge than the minimum at value one
  REQUIRE(g.strategy == "derived");
}

TEST_CASE("bounded-degree complement classes") {
  SECTION("degree at most one: matchings only") {
    auto cls = detail::sparse_classes(5, 1);
    REQUIRE(cls.size() == 3);  // zero, one or two disjoint edges
  }
  SECTION("degree at most two: paths, cycles, isolated vertices") {
    auto cls = detail::sparse_classes(5, 2);
    REQUIRE(cls.size() == 11);
    // spot check: the five-cycle and the five-path are distinct entries
    int cycles5 = 0, paths5 = 0;
    for (const auto& c : cls) {
      if (c.cycles == std::vector<int>{5}) ++cycles5;
      if (c.paths == std::vector<int>{5}) ++paths5;
    }
    REQUIRE(cycles5 == 1);
    REQUIRE(paths5 == 1);
  }
  SECTION("class graphs realize their names") {
    for (const auto& c : detail::sparse_classes(6, 2)) {
      Graph g = detail::sparse_class_graph(6, c);
      REQUIRE(g.order() == 6);
      REQUIRE(g.max_degree() <= 2);
    }
  }
}

TEST_CASE("dense threshold sweep at small parameters") {
  SECTION("k = 1 leaves only the complete graph") {
    ThresholdReport r = threshold_verify(7, 1);
    REQUIRE(r.all_pass);
    REQUIRE(r.entries.size() == 1);
    REQUIRE(r.entries[0].delta == 6);
    REQUIRE(r.entries[0].fmp_value == 6);
  }
  SECTION("k = 2: complements are matchings") {
    ThresholdReport r = threshold_verify(9, 2);
    REQUIRE(r.all_pass);
    REQUIRE(r.entries.size() == 5);  // 0..4 disjoint edges removed
    for (const auto& e : r.entries) {
      REQUIRE(e.ok);
      REQUIRE(e.fmp_value == e.delta);
      Graph g = from_graph6(e.graph6);
      REQUIRE(g.min_degree() >= 9 - 2);
    }
  }
}

TEST_CASE("sparse search for value two stays honest about its region") {
  S2Report r = s2_lowerbound_search(5);
  REQUIRE(r.complete);
  REQUIRE(r.edge_cap == 7);
  REQUIRE(r.levels.size() == 3);  // 5, 6, 7 edges
  // Frozen from a completed exhaustion: no 5-vertex graph with at most
  // 7 edges reaches fmp = 2 (so any such value first appears above the cap).
  REQUIRE_FALSE(r.found);
  SECTION("an expired budget cannot claim completeness") {
    SweepOptions sw;
    sw.deadline = Deadline::after_seconds(0.0);
    S2Report stopped = s2_lowerbound_search(5, sw);
    REQUIRE((stopped.complete == false || stopped.found));
  }
}
