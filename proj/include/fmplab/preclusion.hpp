#pragma once

// Fractional matching preclusion number fmp(G): the least number of edge
// deletions that leave no fractional perfect matching, with fmp(G) = 0 when
// G already has none. Deleting a set T strands more isolated vertices than
// some set S can absorb exactly when fmp(G) <= |T|, so fmp is the minimum,
// over pairs of disjoint vertex sets (S, I) with |I| = |S| + 1, of the
// number of edges leaving I that do not end in S (edges inside I counted
// once). The searches below enumerate S by size then lexicographic order and
// grow I by branch and bound; each vertex added to I commits a nonnegative
// marginal cost, so partial sets at or beyond the incumbent are cut.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/matching.hpp"

namespace fmplab {

struct FmpWitness {
  VertexSet s;  // absorber set
  VertexSet i;  // the |S| + 1 vertices stranded by the deletion
  EdgeSet t;    // deleted edges: every edge from I whose far end is not in S
};

struct PreclusionResult {
  int value = 0;
  std::optional<FmpWitness> witness;  // absent when value == 0
  std::string method;
};

struct FmpOptions {
  int max_order = 20;  // exact search is refused above this order
};

namespace detail {

// Fills ds[v] = degree of v into V \ S and the candidate list (vertices
// outside S). Returns the candidate count.
inline int si_prepare(const Graph& g, std::uint64_t s_mask,
                      std::array<int, kMaxVertices>& ds,
                      std::array<int, kMaxVertices>& cand) {
  int count = 0;
  std::uint64_t outside = g.vertex_mask() & ~s_mask;
  for (std::uint64_t b = outside; b;) {
    int v = std::countr_zero(b);
    b &= b - 1;
    ds[static_cast<std::size_t>(v)] =
        std::popcount(g.neighbor_bits(v) & outside);
    cand[static_cast<std::size_t>(count++)] = v;
  }
  return count;
}

// Branch-and-bound state for choosing I of a fixed size among candidates.
struct SiMin {
  const Graph& g;
  const std::array<int, kMaxVertices>& ds;
  const std::array<int, kMaxVertices>& cand;
  int cand_count;
  int want;   // |I|
  int best;   // exclusive incumbent, updated in place

  void run(int at, std::uint64_t chosen, int picked, int cost) {
    if (cost >= best) return;
    if (picked == want) {
      best = cost;
      return;
    }
    for (int idx = at; cand_count - idx >= want - picked; ++idx) {
      int u = cand[static_cast<std::size_t>(idx)];
      int inc = ds[static_cast<std::size_t>(u)] -
                std::popcount(g.neighbor_bits(u) & chosen);
      if (cost + inc < best)
        run(idx + 1, chosen | std::uint64_t{1} << u, picked + 1, cost + inc);
    }
  }
};

// Same search restricted to an exact target cost; candidates are visited in
// ascending vertex order so the first hit is the lexicographically first I.
struct SiExact {
  const Graph& g;
  const std::array<int, kMaxVertices>& ds;
  const std::array<int, kMaxVertices>& cand;
  int cand_count;
  int want;
  int target;
  bool accept_below = false;  // decision variant: any cost <= target
  std::uint64_t found_mask = 0;
  bool found = false;

  void run(int at, std::uint64_t chosen, int picked, int cost) {
    if (found || cost > target) return;
    if (picked == want) {
      if (cost == target || accept_below) {
        found_mask = chosen;
        found = true;
      }
      return;
    }
    for (int idx = at; cand_count - idx >= want - picked && !found; ++idx) {
      int u = cand[static_cast<std::size_t>(idx)];
      int inc = ds[static_cast<std::size_t>(u)] -
                std::popcount(g.neighbor_bits(u) & chosen);
      if (cost + inc <= target)
        run(idx + 1, chosen | std::uint64_t{1} << u, picked + 1, cost + inc);
    }
  }
};

// Sort candidates by (degree into V \ S, index): cheap insertion sort on a
// fixed buffer; exploring low-degree vertices first finds cheap I sets early.
inline void si_order_by_degree(const std::array<int, kMaxVertices>& ds,
                               std::array<int, kMaxVertices>& cand, int count) {
  for (int a = 1; a < count; ++a) {
    int v = cand[static_cast<std::size_t>(a)];
    int key = ds[static_cast<std::size_t>(v)];
    int b = a - 1;
    while (b >= 0 &&
           (ds[static_cast<std::size_t>(cand[static_cast<std::size_t>(b)])] > key ||
            (ds[static_cast<std::size_t>(cand[static_cast<std::size_t>(b)])] == key &&
             cand[static_cast<std::size_t>(b)] > v))) {
      cand[static_cast<std::size_t>(b + 1)] = cand[static_cast<std::size_t>(b)];
      --b;
    }
    cand[static_cast<std::size_t>(b + 1)] = v;
  }
}

inline void check_fmp_order(const Graph& g, const FmpOptions& opt,
                            const char* who) {
  if (g.order() < 1)
    throw std::invalid_argument(std::string(who) + ": graph must be nonempty");
  if (g.order() > opt.max_order)
    throw ResourceLimitError(std::string(who) + ": order " +
                             std::to_string(g.order()) + " exceeds cap " +
                             std::to_string(opt.max_order));
}

// Deleted-edge set induced by (S, I): edges inside I plus edges from I to
// vertices outside S and I.
inline EdgeSet si_deleted_edges(const Graph& g, std::uint64_t s_mask,
                                std::uint64_t i_mask) {
  std::vector<Edge> t;
  for (const Edge& e : g.edges()) {
    bool u_in = i_mask >> e.u & 1u, v_in = i_mask >> e.v & 1u;
    bool u_s = s_mask >> e.u & 1u, v_s = s_mask >> e.v & 1u;
    if ((u_in && !v_s) || (v_in && !u_s)) t.push_back(e);
  }
  return EdgeSet(std::move(t));
}

}  // namespace detail

// Exact fmp with the lexicographically first optimal witness (S minimal by
// size then lex order, then I lexicographic).
inline PreclusionResult fmp(const Graph& g, const FmpOptions& opt = {}) {
  detail::check_fmp_order(g, opt, "fmp");
  if (!has_fpm(g)) return {0, std::nullopt, "si-search"};
  int n = g.order();
  int best = g.min_degree();  // achievable: strand one minimum-degree vertex

  std::array<int, kMaxVertices> ds{}, cand{};
  for (int s = 0; s <= (n - 1) / 2 && best > 1; ++s) {
    for_each_combination(n, s, [&](const std::vector<int>&, std::uint64_t s_mask) {
      int count = detail::si_prepare(g, s_mask, ds, cand);
      detail::si_order_by_degree(ds, cand, count);
      detail::SiMin search{g, ds, cand, count, s + 1, best};
      search.run(0, 0, 0, 0);
      best = search.best;
      return best > 1;
    });
  }

  // Second pass: recover the first witness that attains the minimum.
  for (int s = 0; s <= (n - 1) / 2; ++s) {
    std::optional<FmpWitness> witness;
    for_each_combination(n, s, [&](const std::vector<int>&, std::uint64_t s_mask) {
      int count = detail::si_prepare(g, s_mask, ds, cand);
      detail::SiExact search{g, ds, cand, count, s + 1, best};
      search.run(0, 0, 0, 0);
      if (!search.found) return true;
      witness = FmpWitness{VertexSet(s_mask), VertexSet(search.found_mask),
                           detail::si_deleted_edges(g, s_mask, search.found_mask)};
      return false;
    });
    if (witness) return {best, std::move(witness), "si-search"};
  }
  throw std::logic_error("fmp: optimum found but no witness recovered");
}

// Decision form: fmp(G) <= k, by the same search with an early exit.
inline bool fmp_at_most(const Graph& g, int k, const FmpOptions& opt = {}) {
  detail::check_fmp_order(g, opt, "fmp_at_most");
  if (k < 0) return false;
  if (!has_fpm(g)) return true;
  if (k >= g.min_degree()) return true;
  if (k == 0) return false;  // an FPM exists, so fmp >= 1
  int n = g.order();

  std::array<int, kMaxVertices> ds{}, cand{};
  for (int s = 0; s <= (n - 1) / 2; ++s) {
    bool found = false;
    for_each_combination(n, s, [&](const std::vector<int>&, std::uint64_t s_mask) {
      int count = detail::si_prepare(g, s_mask, ds, cand);
      detail::si_order_by_degree(ds, cand, count);
      detail::SiExact search{g, ds, cand, count, s + 1, k};
      search.accept_below = true;
      search.run(0, 0, 0, 0);
      found = search.found;
      return !found;
    });
    if (found) return true;
  }
  return false;
}

// --- independent brute-force oracle ----------------------------------------

struct BruteForceResult {
  std::optional<int> value;       // empty means "greater than k_max"
  std::optional<EdgeSet> deleted;  // a minimum preclusion set when found
  int k_max = 0;
};

// Enumerates deletion sets by increasing size (ascending edge-mask order
// within a size) and tests the survivor for an FPM via the double cover.
// Deliberately shares no logic with the (S, I) search.
inline BruteForceResult fmp_bruteforce(const Graph& g, int k_max) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("fmp_bruteforce: graph must be nonempty");
  if (2 * n > kMaxVertices)
    throw ResourceLimitError("fmp_bruteforce: order above 32 (double cover cap)");
  if (g.edge_count() > 63)
    throw ResourceLimitError("fmp_bruteforce: more than 63 edges");
  if (k_max < 0) throw std::invalid_argument("fmp_bruteforce: negative k_max");

  if (!has_fpm(g)) return {0, EdgeSet{}, k_max};
  std::vector<Edge> es = g.edges();
  int m = static_cast<int>(es.size());
  for (int j = 1; j <= k_max && j <= m; ++j) {
    std::uint64_t subset = (std::uint64_t{1} << j) - 1;
    std::uint64_t end = std::uint64_t{1} << m;
    while (subset < end) {
      Graph h(n);
      for (int idx = 0; idx < m; ++idx)
        if (!(subset >> idx & 1u))
          h.add_edge(es[static_cast<std::size_t>(idx)].u,
                     es[static_cast<std::size_t>(idx)].v);
      if (!has_fpm(h)) {
        std::vector<Edge> removed;
        for (int idx = 0; idx < m; ++idx)
          if (subset >> idx & 1u) removed.push_back(es[static_cast<std::size_t>(idx)]);
        return {j, EdgeSet(std::move(removed)), k_max};
      }
      std::uint64_t c = subset & (~subset + 1);
      std::uint64_t r = subset + c;
      subset = (((subset ^ r) >> 2) / c) | r;
    }
  }
  return {std::nullopt, std::nullopt, k_max};
}

// --- integral matching preclusion -------------------------------------------

struct MpOptions {
  std::uint64_t max_subsets = 60'000'000;  // refuse larger searches
};

// Minimum number of edge deletions leaving neither a perfect nor an
// almost-perfect matching. Even order: perfect matchings are the only
// concern and stranding one minimum-degree vertex is always enough. Odd
// order: almost-perfect matchings, and stranding two vertices is enough.
inline int mp(const Graph& g, const MpOptions& opt = {}) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("mp: graph must be nonempty");
  if (g.edge_count() > 63) throw ResourceLimitError("mp: more than 63 edges");

  auto survives = [n](const Graph& h) {
    return n % 2 == 0 ? has_perfect_matching(h) : has_almost_perfect_matching(h);
  };
  if (!survives(g)) return 0;

  int ub;
  if (n % 2 == 0) {
    ub = g.min_degree();
  } else {
    if (n == 1)
      throw std::invalid_argument("mp: undefined for a single vertex");
    ub = 2 * kMaxVertices;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        ub = std::min(ub, g.degree(u) + g.degree(v) - (g.adjacent(u, v) ? 1 : 0));
  }

  std::vector<Edge> es = g.edges();
  int m = static_cast<int>(es.size());
  std::uint64_t work = 0;
  for (int j = 1; j <= ub && j <= m; ++j) {
    work += binomial(m, j);
    if (work > opt.max_subsets)
      throw ResourceLimitError("mp: at least " + std::to_string(work) +
                               " deletion sets, cap " +
                               std::to_string(opt.max_subsets));
  }
  for (int j = 1; j <= ub && j <= m; ++j) {
    std::uint64_t subset = (std::uint64_t{1} << j) - 1;
    std::uint64_t end = std::uint64_t{1} << m;
    while (subset < end) {
      Graph h(n);
      for (int idx = 0; idx < m; ++idx)
        if (!(subset >> idx & 1u))
          h.add_edge(es[static_cast<std::size_t>(idx)].u,
                     es[static_cast<std::size_t>(idx)].v);
      if (!survives(h)) return j;
      std::uint64_t c = subset & (~subset + 1);
      std::uint64_t r = subset + c;
      subset = (((subset ^ r) >> 2) / c) | r;
    }
  }
  throw std::logic_error("mp: upper bound was not achieved");
}

// --- fmp in {0, 1, >=2} with certificates -----------------------------------

enum class FmpClass { zero, one, at_least_two };

struct Fmp01Result {
  FmpClass cls = FmpClass::zero;
  std::optional<NoFpmWitness> no_fpm;          // zero: witness for G itself
  std::optional<FpmCertificate> fpm;           // one / at_least_two: FPM of G
  std::optional<Edge> critical_edge;           // one: first edge whose loss kills it
  std::optional<NoFpmWitness> after_deletion;  // one: witness for G - e
  std::vector<std::pair<Edge, FpmCertificate>> per_edge;  // at_least_two
};

inline Fmp01Result classify_fmp01(const Graph& g,
                                  bool partition_certificates = false) {
  Fmp01Result out;
  FpmResult base = has_fpm_certified(g, partition_certificates);
  if (!base.has) {
    out.cls = FmpClass::zero;
    out.no_fpm = base.witness;
    return out;
  }
  out.fpm = std::move(base.certificate);
  for (const Edge& e : g.edges()) {
    Graph h = delete_edge(g, e.u, e.v);
    FpmResult after = has_fpm_certified(h, partition_certificates);
    if (!after.has) {
      out.cls = FmpClass::one;
      out.critical_edge = e;
      out.after_deletion = after.witness;
      out.per_edge.clear();
      return out;
    }
    out.per_edge.emplace_back(e, std::move(*after.certificate));
  }
  out.cls = FmpClass::at_least_two;
  return out;
}

// --- witness validation ------------------------------------------------------

// nullopt when (S, I, T) certifies fmp(G) <= value; otherwise the defect.
inline std::optional<std::string> check_fmp_witness(const Graph& g,
                                                    const FmpWitness& w,
                                                    int value) {
  if ((w.s.bits() | w.i.bits()) & ~g.vertex_mask())
    return "witness vertex out of range";
  if (w.s.bits() & w.i.bits()) return "S and I overlap";
  if (w.i.size() != w.s.size() + 1) return "need |I| = |S| + 1";
  if (w.t.size() != value)
    return "deleted-edge count " + std::to_string(w.t.size()) +
           " differs from claimed value " + std::to_string(value);
  for (const Edge& e : w.t.edges())
    if (!g.adjacent(e.u, e.v)) return "T contains a non-edge";
  Graph h = delete_edges(g, w.t);
  for (int v : w.i.to_vector())
    if (h.neighbor_bits(v) & ~w.s.bits())
      return "vertex " + std::to_string(v) + " of I keeps an edge outside S";
  if (isolated_count(h, w.s) <= w.s.size())
    return "removing S strands too few vertices";
  return std::nullopt;
}

// nullopt when the classification and all of its evidence hold up against
// recomputation on g.
inline std::optional<std::string> check_fmp01_result(const Graph& g,
                                                     const Fmp01Result& r) {
  switch (r.cls) {
    case FmpClass::zero: {
      if (has_fpm(g)) return "classified zero but an FPM exists";
      if (r.no_fpm) return check_no_fpm_witness(g, *r.no_fpm);
      if (g.order() <= kSubsetOracleCap)
        return "zero classification lacks a witness despite small order";
      return std::nullopt;
    }
    case FmpClass::one: {
      if (!r.fpm) return "one classification lacks an FPM certificate";
      if (auto err = check_fpm_certificate(g, *r.fpm)) return err;
      if (!r.critical_edge) return "one classification lacks its edge";
      const Edge& e = *r.critical_edge;
      if (e.v >= g.order() || !g.adjacent(e.u, e.v))
        return "critical edge is not an edge";
      Graph h = delete_edge(g, e.u, e.v);
      if (has_fpm(h)) return "graph minus the critical edge still has an FPM";
      if (r.after_deletion) return check_no_fpm_witness(h, *r.after_deletion);
      if (h.order() <= kSubsetOracleCap)
        return "deleted-edge witness missing despite small order";
      return std::nullopt;
    }
    case FmpClass::at_least_two: {
      if (!r.fpm) return "classification lacks an FPM certificate";
      if (auto err = check_fpm_certificate(g, *r.fpm)) return err;
      if (r.per_edge.size() != static_cast<std::size_t>(g.edge_count()))
        return "per-edge certificates do not cover every edge";
      std::size_t at = 0;
      for (const Edge& e : g.edges()) {
        const auto& [we, cert] = r.per_edge[at++];
        if (!(we == e)) return "per-edge certificates out of order";
        if (auto err = check_fpm_certificate(delete_edge(g, e.u, e.v), cert))
          return err;
      }
      return std::nullopt;
    }
  }
  return "unknown classification";
}

}  // namespace fmplab
