#include <cstdint>
#include <set>
#include <utility>

#include <catch2/catch_amalgamated.hpp>

#include "fmplab/errors.hpp"
#include "fmplab/families.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/matching.hpp"
#include "fmplab/preclusion.hpp"

using namespace fmplab;

namespace {

// Asserts the factors are pairwise disjoint perfect matchings of K_m that
// together use every edge exactly once.
void require_one_factorization(int m, const std::vector<Matching>& factors) {
  Graph km = complete_graph(m);
  REQUIRE(static_cast<int>(factors.size()) == m - 1);
  std::set<std::pair<int, int>> used;
  for (const Matching& f : factors) {
    REQUIRE(is_valid_matching(km, f));
    REQUIRE(2 * f.size() == m);
    for (const Edge& e : f.edges()) REQUIRE(used.insert({e.u, e.v}).second);
  }
  REQUIRE(static_cast<int>(used.size()) == km.edge_count());
}

}  // namespace

TEST_CASE("round-robin one-factorization") {
  REQUIRE(one_factorization(2).size() == 1);
  SECTION("exact factors for m = 4") {
    auto fs = one_factorization(4);
    REQUIRE(fs.size() == 3);
    std::set<std::set<std::pair<int, int>>> got;
    for (const Matching& f : fs) {
      std::set<std::pair<int, int>> s;
      for (const Edge& e : f.edges()) s.insert({e.u, e.v});
      got.insert(s);
    }
    std::set<std::set<std::pair<int, int>>> want = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    REQUIRE(got == want);
  }
  for (int m : {6, 8, 12, 20}) require_one_factorization(m, one_factorization(m));
  REQUIRE_THROWS_AS(one_factorization(5), std::invalid_argument);
  REQUIRE_THROWS_AS(one_factorization(66), ResourceLimitError);
}

TEST_CASE("regular factorizable graphs") {
  SECTION("even order: prefix of a one-factorization") {
    FactorizableGraph fg = regular_factorizable(8, 3);
    REQUIRE(fg.graph.order() == 8);
    REQUIRE(fg.graph.edge_count() == 12);
    REQUIRE(fg.graph.min_degree() == 3);
    REQUIRE(fg.graph.max_degree() == 3);
    REQUIRE(fg.factors.size() == 3);
    std::set<std::pair<int, int>> used;
    for (const Matching& f : fg.factors) {
      REQUIRE(is_valid_matching(fg.graph, f));
      REQUIRE(f.size() == 4);
      for (const Edge& e : f.edges()) REQUIRE(used.insert({e.u, e.v}).second);
    }
    REQUIRE(static_cast<int>(used.size()) == fg.graph.edge_count());
  }
  SECTION("odd order circulant needs even valency") {
    FactorizableGraph fg = regular_factorizable(9, 4);
    REQUIRE(fg.graph.order() == 9);
    REQUIRE(fg.graph.min_degree() == 4);
    REQUIRE(fg.graph.max_degree() == 4);
    REQUIRE(fg.factors.empty());
    REQUIRE_THROWS_AS(regular_factorizable(9, 3), std::invalid_argument);
  }
}

TEST_CASE("near-complete block: complete graph minus a maximum matching") {
  Graph g = k_plus2_minus_matching(5);  // K7 minus three disjoint edges
  REQUIRE(g.order() == 7);
  REQUIRE(g.edge_count() == 21 - 3);
  REQUIRE(g.min_degree() == 5);
  REQUIRE(g.max_degree() == 6);
  REQUIRE_THROWS_AS(k_plus2_minus_matching(4), std::invalid_argument);
  REQUIRE_THROWS_AS(k_plus2_minus_matching(1), std::invalid_argument);
}

TEST_CASE("sparse two-preclusion families") {
  SECTION("matching plus triangle") {
    for (int n = 5; n <= 15; n += 2) {
      Graph h = h_family(n, 2);
      REQUIRE(h.order() == n);
      REQUIRE(h.edge_count() == (n + 3) / 2);
    }
    REQUIRE_THROWS_AS(h_family(6, 2), std::invalid_argument);
  }
  SECTION("bowtie with apex and attached squares") {
    Graph b = bowtie_c4_apex();
    REQUIRE(b.order() == 9);
    REQUIRE(b.edge_count() == 12);
    REQUIRE(b.min_degree() == 2);
    for (int n : {9, 13, 17}) {
      Graph h = h_family(n, 3);
      REQUIRE(h.order() == n);
      REQUIRE(h.edge_count() == n + 3);
      REQUIRE(h.min_degree() == 2);
    }
    REQUIRE_THROWS_AS(h_family(11, 3), std::invalid_argument);
  }
  SECTION("variant with a six-cycle tail") {
    for (int n : {15, 19}) {
      Graph h = h_family(n, 4);
      REQUIRE(h.order() == n);
      REQUIRE(h.edge_count() == n + 3);
    }
    REQUIRE_THROWS_AS(h_family(11, 4), std::invalid_argument);
  }
}

TEST_CASE("apex over an even factorizable core") {
  Graph g = apex_over_factorizable(13, 6);
  REQUIRE(g.order() == 13);
  REQUIRE(g.edge_count() == 12 * 8 / 2);  // (n-1)(k+2)/2
  REQUIRE(g.min_degree() == 7);
  REQUIRE(g.degree(12) == 12);  // the apex sees everyone

  // The construction certifies fmp >= 6; the exact value overshoots to the
  // minimum degree. Regression-pinned from an exact branch-and-bound run.
  PreclusionResult r = fmp(g);
  REQUIRE(r.value == 7);
}

TEST_CASE("dense witness one edge under the forcing threshold") {
  Graph g = f_lower_witness(8, 3);
  REQUIRE(g.order() == 8);
  REQUIRE(g.edge_count() == 21 + 3 - 1);  // C(7,2) + k - 1
  REQUIRE(g.degree(7) == 2);              // k - 1 attachments
}

TEST_CASE("minimum-size witness dispatch by case") {
  struct Row {
    int n, k;
    std::string strategy;
    long long edges;
  };
  // edge counts: nk/2 rounded per case; apex case is (n-1)(k+2)/2
  std::vector<Row> rows = {
      {14, 6, "disjoint-cliques", 42},
      {15, 6, "factor-plus-cliques", 45},
      {16, 6, "two-factors-plus-cliques", 48},
      {17, 7, "factor-plus-near-complete", 60},
      {13, 6, "apex-over-factor", 48},
      {7, 6, "disjoint-cliques", 21},
  };
  for (const Row& row : rows) {
    SWitness w = s_witness(row.n, row.k);
    INFO("n=" << row.n << " k=" << row.k);
    REQUIRE(w.strategy == row.strategy);
    REQUIRE(w.edge_formula == row.edges);
    REQUIRE(w.graph.edge_count() == row.edges);
    REQUIRE(w.graph.order() == row.n);
  }
  REQUIRE_THROWS_AS(s_witness(10, 5), std::invalid_argument);  // below the domain
  REQUIRE_THROWS_AS(s_witness(6, 7), std::invalid_argument);   // k too large
}

TEST_CASE("family catalog builds everything it lists") {
  for (const auto& [name, desc] : family_catalog()) {
    REQUIRE_FALSE(desc.empty());
    std::vector<long long> params;
    if (name == "empty" || name == "complete" || name == "path") params = {5};
    if (name == "cycle") params = {5};
    if (name == "clique_union") params = {2, 3};
    if (name == "regular_factorizable") params = {8, 3};
    if (name == "k_plus2_minus_matching") params = {5};
    if (name == "h2") params = {7};
    if (name == "h3") params = {9};
    if (name == "h4") params = {15};
    if (name == "apex_over_factorizable") params = {13, 6};
    if (name == "f_lower_witness") params = {8, 3};
    if (name == "s_witness") params = {14, 6};
    Graph g = build_family({name, params});
    REQUIRE(g.order() >= 0);
  }
  REQUIRE_THROWS_AS(build_family({"no_such_family", {}}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_family({"cycle", {}}), std::invalid_argument);
}
