#pragma once

// Constructive graph families: staples (complete, cycle, path, Petersen),
// round-robin one-factorizations and the regular graphs they assemble, and
// the sparse witnesses used by the extremal studies.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/matching.hpp"

namespace fmplab {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need order >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph clique_union(int copies, int size) {
  if (copies < 0) throw std::invalid_argument("clique_union: negative count");
  Graph g(0);
  for (int c = 0; c < copies; ++c) g = disjoint_union(g, complete_graph(size));
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

// --- factorizations ----------------------------------------------------------

// Round-robin one-factorization of K_m (m even): fix vertex m-1 and rotate
// the rest around a circle; round r pairs m-1 with r and, for each i, the
// seats r+i and r-i (mod m-1). The m-1 rounds partition the edges of K_m.
inline std::vector<Matching> one_factorization(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("one_factorization: order must be even >= 2");
  if (m > kMaxVertices)
    throw ResourceLimitError("one_factorization: order > 64");
  std::vector<Matching> factors;
  int mod = m - 1;
  for (int r = 0; r < mod; ++r) {
    std::vector<Edge> pairs;
    pairs.emplace_back(m - 1, r);
    for (int i = 1; i <= m / 2 - 1; ++i)
      pairs.emplace_back((r + i) % mod, (r - i + mod) % mod);
    factors.push_back(Matching(std::move(pairs)));
  }
  return factors;
}

// A k-regular graph on m vertices together with the factorization evidence
// used for lower-bound certificates: for even m, k edge-disjoint perfect
// matchings whose union is the graph. For odd m (k must then be even) a
// circulant is returned and no matchings exist, so `factors` stays empty.
struct FactorizableGraph {
  Graph graph;
  std::vector<Matching> factors;
};

inline FactorizableGraph regular_factorizable(int m, int k) {
  if (m < 1 || k < 0 || k > m - 1)
    throw std::invalid_argument("regular_factorizable: need 0 <= k <= m-1");
  if (m % 2 == 0) {
    auto all = one_factorization(m);
    FactorizableGraph out{Graph(m), {}};
    for (int f = 0; f < k; ++f) {
      for (const Edge& e : all[static_cast<std::size_t>(f)].edges())
        out.graph.add_edge(e.u, e.v);
      out.factors.push_back(all[static_cast<std::size_t>(f)]);
    }
    return out;
  }
  if (k % 2 != 0)
    throw std::invalid_argument(
        "regular_factorizable: odd order needs even degree");
  Graph g(m);
  for (int d = 1; d <= k / 2; ++d)
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + d) % m);
  return {std::move(g), {}};
}

// K_{k+2} minus a maximum matching (k odd, so the order k+2 is odd and the
// matching leaves one vertex untouched). Minimum degree k.
inline Graph k_plus2_minus_matching(int k) {
  if (k < 3 || k % 2 != 1)
    throw std::invalid_argument("k_plus2_minus_matching: k must be odd >= 3");
  Graph g = complete_graph(k + 2);
  for (int i = 0; i + 1 <= k; i += 2) g = delete_edge(g, i, i + 1);
  return g;
}

// --- sparse extremal families ------------------------------------------------

// Two 4-cycles 0-1-2-3 and 4-5-6-7 plus an apex 8 joined to 0, 3, 4, 7.
// Nine vertices, twelve edges, minimum degree 2.
inline Graph bowtie_c4_apex() {
  Graph g(9);
  for (int base : {0, 4}) {
    g.add_edge(base, base + 1);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base + 2, base + 3);
    g.add_edge(base + 3, base);
  }
  g.add_edge(8, 0);
  g.add_edge(8, 3);
  g.add_edge(8, 4);
  g.add_edge(8, 7);
  return g;
}

// Index 2: (n-3)/2 disjoint edges plus a triangle (odd n >= 3).
// Index 3: the apex graph above plus disjoint 4-cycles (n = 4k+1, k >= 2).
// Index 4: same with one 6-cycle swapped in (n = 4k+3, k >= 3).
inline Graph h_family(int n, int index) {
  switch (index) {
    case 2: {
      if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("h_family(2): order must be odd >= 3");
      Graph g(n);
      for (int v = 0; v + 1 < n - 3; v += 2) g.add_edge(v, v + 1);
      g.add_edge(n - 3, n - 2);
      g.add_edge(n - 2, n - 1);
      g.add_edge(n - 1, n - 3);
      return g;
    }
    case 3: {
      if (n < 9 || n % 4 != 1)
        throw std::invalid_argument("h_family(3): order must be 4k+1, k >= 2");
      Graph g = bowtie_c4_apex();
      for (int at = 9; at < n; at += 4) g = disjoint_union(g, cycle_graph(4));
      return g;
    }
    case 4: {
      if (n < 15 || n % 4 != 3)
        throw std::invalid_argument("h_family(4): order must be 4k+3, k >= 3");
      Graph g = bowtie_c4_apex();
      for (int at = 9; at < n - 6; at += 4) g = disjoint_union(g, cycle_graph(4));
      return disjoint_union(g, cycle_graph(6));
    }
    default:
      throw std::invalid_argument("h_family: index must be 2, 3 or 4");
  }
}

// A k-regular graph on n-1 vertices (n odd) plus an apex joined to all of it.
inline Graph apex_over_factorizable(int n, int k) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("apex_over_factorizable: order must be odd >= 3");
  if (k < 0 || k > n - 2)
    throw std::invalid_argument("apex_over_factorizable: need 0 <= k <= n-2");
  Graph g = regular_factorizable(n - 1, k).graph;
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (int v = 0; v < n - 1; ++v) out.add_edge(n - 1, v);
  return out;
}

// K_{n-1} plus an extra vertex with k-1 edges into it: order n, size
// C(n-1,2) + k - 1, and k-1 deletions strand the extra vertex.
inline Graph f_lower_witness(int n, int k) {
  if (n < 2) throw std::invalid_argument("f_lower_witness: order must be >= 2");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("f_lower_witness: need 1 <= k <= n-1");
  Graph g(n);
  for (int u = 0; u < n - 1; ++u)
    for (int v = u + 1; v < n - 1; ++v) g.add_edge(u, v);
  for (int v = 0; v < k - 1; ++v) g.add_edge(n - 1, v);
  return g;
}

// --- minimum-size witnesses for prescribed preclusion k >= 6 ------------------

struct SWitnessPart {
  int offset;                       // first vertex of the part in the union
  int order;
  std::string kind;                 // complete | factorizable | near-complete | apex
  std::vector<Matching> factors;    // local labels; factorizable parts only
};

struct SWitness {
  Graph graph;
  std::string strategy;   // which construction case applied
  long long edge_formula; // size the construction is supposed to have
  std::vector<SWitnessPart> parts;
};

// Dispatch on n = l(k+1) + r, 0 <= r <= k. Every case yields a graph of
// order n whose preclusion number is k and whose size meets the intended
// minimum (nk/2, (nk+1)/2, or (n-1)(k+2)/2 in the apex case).
inline SWitness s_witness(int n, int k) {
  if (k < 6) throw std::invalid_argument("s_witness: need k >= 6");
  if (k > n - 1) throw std::invalid_argument("s_witness: need k <= n - 1");
  int l = n / (k + 1), r = n % (k + 1);

  SWitness out{Graph(0), "", 0, {}};
  auto append = [&out](const Graph& part, const std::string& kind,
                       std::vector<Matching> factors = {}) {
    out.parts.push_back(
        {out.graph.order(), part.order(), kind, std::move(factors)});
    out.graph = disjoint_union(out.graph, part);
  };

  if (r == 0) {
    for (int c = 0; c < l; ++c) append(complete_graph(k + 1), "complete");
    out.strategy = "disjoint-cliques";
    out.edge_formula = static_cast<long long>(n) * k / 2;
    return out;
  }
  if ((k + r) % 2 == 1) {
    auto f1 = regular_factorizable(k + r + 1, k);
    append(f1.graph, "factorizable", std::move(f1.factors));
    for (int c = 0; c < l - 1; ++c) append(complete_graph(k + 1), "complete");
    out.strategy = "factor-plus-cliques";
    out.edge_formula = static_cast<long long>(n) * k / 2;
    return out;
  }
  if (l >= 2 && k % 2 == 0) {
    auto f3 = regular_factorizable(k + r, k);
    append(f3.graph, "factorizable", std::move(f3.factors));
    for (int c = 0; c < l - 2; ++c) append(complete_graph(k + 1), "complete");
    auto f5 = regular_factorizable(k + 2, k);
    append(f5.graph, "factorizable", std::move(f5.factors));
    out.strategy = "two-factors-plus-cliques";
    out.edge_formula = static_cast<long long>(n) * k / 2;
    return out;
  }
  if (l >= 2) {  // k odd, k + r even
    auto f3 = regular_factorizable(k + r, k);
    append(f3.graph, "factorizable", std::move(f3.factors));
    for (int c = 0; c < l - 2; ++c) append(complete_graph(k + 1), "complete");
    append(k_plus2_minus_matching(k), "near-complete");
    out.strategy = "factor-plus-near-complete";
    out.edge_formula = (static_cast<long long>(n) * k + 1) / 2;
    return out;
  }
  // l == 1, k + r even, and r >= 1 forces k <= n - 2: apex construction.
  out.graph = apex_over_factorizable(n, k);
  out.parts.push_back({0, n, "apex", {}});
  out.strategy = "apex-over-factor";
  out.edge_formula = static_cast<long long>(n - 1) * (k + 2) / 2;
  return out;
}

// --- name-driven construction (CLI) -----------------------------------------

struct FamilySpec {
  std::string name;
  std::vector<long long> params;
};

inline const std::vector<std::pair<std::string, std::string>>& family_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog = {
      {"empty", "empty n: no edges"},
      {"complete", "complete n"},
      {"path", "path n"},
      {"cycle", "cycle n (n >= 3)"},
      {"clique_union", "clique_union copies size"},
      {"petersen", "petersen: the 10-vertex 3-regular classic"},
      {"regular_factorizable", "regular_factorizable m k: k-regular on m"},
      {"k_plus2_minus_matching", "k_plus2_minus_matching k: K_{k+2} minus a maximum matching (k odd)"},
      {"bowtie", "bowtie: two 4-cycles plus an apex (9 vertices)"},
      {"h2", "h2 n: (n-3)/2 disjoint edges plus a triangle (odd n)"},
      {"h3", "h3 n: bowtie plus 4-cycles (n = 4k+1, k >= 2)"},
      {"h4", "h4 n: bowtie plus 4-cycles and one 6-cycle (n = 4k+3, k >= 3)"},
      {"apex_over_factorizable", "apex_over_factorizable n k (odd n)"},
      {"f_lower_witness", "f_lower_witness n k: K_{n-1} plus a (k-1)-edge vertex"},
      {"s_witness", "s_witness n k: minimum-size graph with preclusion k (k >= 6)"},
  };
  return catalog;
}

inline Graph build_family(const FamilySpec& spec) {
  const auto& name = spec.name;
  auto arity = [&](std::size_t want) {
    if (spec.params.size() != want)
      throw std::invalid_argument("family " + name + ": expected " +
                                  std::to_string(want) + " parameter(s), got " +
                                  std::to_string(spec.params.size()));
  };
  auto p = [&](std::size_t i) { return static_cast<int>(spec.params[i]); };

  if (name == "empty") { arity(1); return empty_graph(p(0)); }
  if (name == "complete") { arity(1); return complete_graph(p(0)); }
  if (name == "path") { arity(1); return path_graph(p(0)); }
  if (name == "cycle") { arity(1); return cycle_graph(p(0)); }
  if (name == "clique_union") { arity(2); return clique_union(p(0), p(1)); }
  if (name == "petersen") { arity(0); return petersen_graph(); }
  if (name == "regular_factorizable") {
    arity(2);
    return regular_factorizable(p(0), p(1)).graph;
  }
  if (name == "k_plus2_minus_matching") { arity(1); return k_plus2_minus_matching(p(0)); }
  if (name == "bowtie") { arity(0); return bowtie_c4_apex(); }
  if (name == "h2") { arity(1); return h_family(p(0), 2); }
  if (name == "h3") { arity(1); return h_family(p(0), 3); }
  if (name == "h4") { arity(1); return h_family(p(0), 4); }
  if (name == "apex_over_factorizable") { arity(2); return apex_over_factorizable(p(0), p(1)); }
  if (name == "f_lower_witness") { arity(2); return f_lower_witness(p(0), p(1)); }
  if (name == "s_witness") { arity(2); return s_witness(p(0), p(1)).graph; }
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace fmplab
