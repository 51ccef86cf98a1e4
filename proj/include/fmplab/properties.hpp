#pragma once

// Randomized and small-exhaustive invariant checks. Every function returns
// a PropertyResult; a nonzero violation count is a genuine bug in the
// engines (these are theorems, not heuristics). Sampling is seeded and
// uses raw generator bits only, so a fixed seed reproduces the exact run.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fmplab/enumerate.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/hamiltonian.hpp"
#include "fmplab/matching.hpp"
#include "fmplab/preclusion.hpp"

namespace fmplab {

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // empty when clean

  bool pass() const { return violations == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20260815;

namespace detail {

inline double rnd01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline int rnd_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rnd01(rng) < p) g.add_edge(u, v);
  return g;
}

inline Graph random_spanning_subgraph(std::mt19937_64& rng, const Graph& g,
                                      double keep) {
  Graph h(g.order());
  for (const Edge& e : g.edges())
    if (rnd01(rng) < keep) h.add_edge(e.u, e.v);
  return h;
}

inline void note_violation(PropertyResult& r, const std::string& what) {
  ++r.violations;
  if (r.first_violation.empty()) r.first_violation = what;
}

}  // namespace detail

// Deleting edges can only lower the preclusion number: a deletion set for
// the subgraph extends to one for the supergraph... the other way around:
// any set precluding the supergraph restricted to the subgraph's edges
// still precludes it, so fmp(H) <= fmp(G) for spanning H.
inline PropertyResult prop_spanning_subgraph_monotone(
    std::uint64_t seed = kDefaultSeed, int samples = 1000) {
  std::mt19937_64 rng(seed + 1);
  PropertyResult r{"spanning-subgraph-monotone"};
  for (int i = 0; i < samples; ++i) {
    int n = detail::rnd_int(rng, 4, 10);
    Graph g = detail::random_graph(rng, n, 0.3 + 0.6 * detail::rnd01(rng));
    Graph h = detail::random_spanning_subgraph(rng, g, 0.7);
    ++r.checked;
    if (fmp(h).value > fmp(g).value)
      detail::note_violation(r, to_graph6(g) + " vs " + to_graph6(h));
  }
  return r;
}

// Removing a single edge lowers the preclusion number by at most one.
inline PropertyResult prop_single_edge_drop(std::uint64_t seed = kDefaultSeed,
                                            int samples = 500) {
  std::mt19937_64 rng(seed + 2);
  PropertyResult r{"single-edge-deletion-drop"};
  for (int i = 0; i < samples; ++i) {
    int n = detail::rnd_int(rng, 4, 9);
    Graph g = detail::random_graph(rng, n, 0.3 + 0.6 * detail::rnd01(rng));
    int base = fmp(g).value;
    for (const Edge& e : g.edges()) {
      ++r.checked;
      if (fmp(delete_edge(g, e.u, e.v)).value < base - 1)
        detail::note_violation(r, to_graph6(g) + " minus " +
                                      std::to_string(e.u) + "-" +
                                      std::to_string(e.v));
    }
  }
  return r;
}

namespace detail {

// Shared sample stream for the even-order整数/fractional comparisons: all
// labeled graphs on 4 and 6 vertices, then random graphs on 8 and 10
// vertices kept sparse enough (min degree <= 4) that the whole-subset
// integral sweep stays cheap.
template <class Check>
void even_order_samples(std::uint64_t seed, int random_samples, Check&& check) {
  for (int n : {4, 6})
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) { check(g); });
  std::mt19937_64 rng(seed + 3);
  int accepted = 0, attempts = 0;
  while (accepted < random_samples && attempts < random_samples * 200) {
    ++attempts;
    int n = (rnd_int(rng, 0, 1) == 0) ? 8 : 10;
    Graph g = random_graph(rng, n, 0.25 + 0.25 * rnd01(rng));
    if (g.min_degree() > 4) continue;  // keeps the integral sweep small
    ++accepted;
    check(g);
  }
}

}  // namespace detail

// Even order: the integral preclusion number never exceeds the fractional
// one, and it is bounded by the minimum degree.
inline PropertyResult prop_even_mp_le_fmp(std::uint64_t seed = kDefaultSeed,
                                          int random_samples = 300) {
  PropertyResult r{"even-order-mp-below-fmp"};
  detail::even_order_samples(seed, random_samples, [&](const Graph& g) {
    ++r.checked;
    if (mp(g) > fmp(g).value) detail::note_violation(r, to_graph6(g));
  });
  return r;
}

inline PropertyResult prop_even_mp_le_delta(std::uint64_t seed = kDefaultSeed,
                                            int random_samples = 300) {
  PropertyResult r{"even-order-mp-below-min-degree"};
  detail::even_order_samples(seed, random_samples, [&](const Graph& g) {
    if (g.order() == 0) return;
    ++r.checked;
    if (mp(g) > g.min_degree()) detail::note_violation(r, to_graph6(g));
  });
  return r;
}

// Even order: if the integral number already reaches the minimum degree,
// the fractional one is pinched between them and must equal it too.
inline PropertyResult prop_even_mp_delta_pinch(std::uint64_t seed = kDefaultSeed,
                                               int random_samples = 300) {
  PropertyResult r{"even-order-mp-at-min-degree-pins-fmp"};
  detail::even_order_samples(seed, random_samples, [&](const Graph& g) {
    if (g.order() == 0) return;
    if (mp(g) != g.min_degree()) return;
    ++r.checked;
    if (fmp(g).value != g.min_degree()) detail::note_violation(r, to_graph6(g));
  });
  return r;
}

// Preclusion of a disjoint union is the smaller of the parts' values:
// killing either part kills the whole.
inline PropertyResult prop_union_min(std::uint64_t seed = kDefaultSeed,
                                     int samples = 500) {
  std::mt19937_64 rng(seed + 4);
  PropertyResult r{"disjoint-union-takes-min"};
  for (int i = 0; i < samples; ++i) {
    Graph a = detail::random_graph(rng, detail::rnd_int(rng, 3, 6),
                                   0.3 + 0.6 * detail::rnd01(rng));
    Graph b = detail::random_graph(rng, detail::rnd_int(rng, 3, 6),
                                   0.3 + 0.6 * detail::rnd01(rng));
    ++r.checked;
    int want = std::min(fmp(a).value, fmp(b).value);
    if (fmp(disjoint_union(a, b)).value != want)
      detail::note_violation(r, to_graph6(a) + " + " + to_graph6(b));
  }
  return r;
}

// Whenever a fractional perfect matching exists, delta <= ceil(n/2) + fmp - 1.
// Reason: if delta exceeded that, deleting any fmp-many edges would leave
// minimum degree at least n/2, forcing a spanning cycle and with it a
// fractional perfect matching. The ceiling is sharp: the triangle has
// delta = 2 with fmp = 1. (Strict real division would wrongly demand 3/2.)
inline PropertyResult prop_min_degree_bound(std::uint64_t seed = kDefaultSeed,
                                            int random_samples = 300) {
  PropertyResult r{"fpm-min-degree-bound"};
  auto check = [&](const Graph& g) {
    if (!has_fpm(g)) return;
    ++r.checked;
    int k = fmp(g).value;
    if (g.min_degree() > (g.order() + 1) / 2 + k - 1)
      detail::note_violation(r, to_graph6(g));
  };
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) { check(g); });
  std::mt19937_64 rng(seed + 5);
  for (int i = 0; i < random_samples; ++i)
    check(detail::random_graph(rng, detail::rnd_int(rng, 7, 10),
                               0.3 + 0.6 * detail::rnd01(rng)));
  return r;
}

// 0 <= fmp <= n-1 on every graph inspected.
inline PropertyResult prop_fmp_range(std::uint64_t seed = kDefaultSeed,
                                     int random_samples = 300) {
  PropertyResult r{"fmp-within-0-to-min-degree"};
  auto check = [&](const Graph& g) {
    ++r.checked;
    int v = fmp(g).value;
    // Isolating a minimum-degree vertex always works, so fmp <= delta; and
    // delta <= n - 1 gives the coarser range bound.
    if (v < 0 || v > g.min_degree() || v > g.order() - 1)
      detail::note_violation(r, to_graph6(g));
  };
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) { check(g); });
  std::mt19937_64 rng(seed + 6);
  for (int i = 0; i < random_samples; ++i)
    check(detail::random_graph(rng, detail::rnd_int(rng, 7, 10),
                               0.3 + 0.6 * detail::rnd01(rng)));
  return r;
}

// Sufficient conditions for a Hamiltonian cycle: minimum degree at least
// n/2 (Dirac), or degree sums of nonadjacent pairs at least n (Ore).
inline PropertyResult prop_dirac(std::uint64_t seed = kDefaultSeed,
                                 int samples = 500) {
  std::mt19937_64 rng(seed + 7);
  PropertyResult r{"dirac-min-degree-hamiltonian"};
  int attempts = 0;
  while (r.checked < static_cast<std::uint64_t>(samples) &&
         attempts < samples * 200) {
    ++attempts;
    int n = detail::rnd_int(rng, 3, 14);
    Graph g = detail::random_graph(rng, n, 0.55 + 0.4 * detail::rnd01(rng));
    if (2 * g.min_degree() < n) continue;
    ++r.checked;
    if (!is_hamiltonian(g)) detail::note_violation(r, to_graph6(g));
  }
  return r;
}

inline PropertyResult prop_ore(std::uint64_t seed = kDefaultSeed,
                               int samples = 500) {
  std::mt19937_64 rng(seed + 8);
  PropertyResult r{"ore-degree-sum-hamiltonian"};
  int attempts = 0;
  while (r.checked < static_cast<std::uint64_t>(samples) &&
         attempts < samples * 200) {
    ++attempts;
    int n = detail::rnd_int(rng, 3, 14);
    Graph g = detail::random_graph(rng, n, 0.5 + 0.45 * detail::rnd01(rng));
    bool ore = true;
    for (int u = 0; u < n && ore; ++u)
      for (int v = u + 1; v < n && ore; ++v)
        if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) < n) ore = false;
    if (!ore) continue;
    ++r.checked;
    if (!is_hamiltonian(g)) detail::note_violation(r, to_graph6(g));
  }
  return r;
}

// Fractional matching number: at least the integral matching number, equal
// to n/2 exactly when a fractional perfect matching exists, agreeing with
// the subset-deficiency oracle, and integral matchings stay fractional
// (a perfect matching forces a fractional perfect matching).
inline PropertyResult prop_mu_f(std::uint64_t seed = kDefaultSeed,
                                int random_samples = 300) {
  PropertyResult r{"fractional-matching-number-bounds"};
  auto check = [&](const Graph& g, bool with_oracle) {
    ++r.checked;
    Rational mu = fractional_matching_number(g);
    Rational nu(max_matching_size(g), 1);
    Rational half_n(g.order(), 2);
    if (mu < nu || half_n < mu) {
      detail::note_violation(r, to_graph6(g) + " mu_f=" + mu.str());
      return;
    }
    if ((mu == half_n) != has_fpm(g)) {
      detail::note_violation(r, to_graph6(g) + " fpm mismatch");
      return;
    }
    if (has_perfect_matching(g) && !has_fpm(g)) {
      detail::note_violation(r, to_graph6(g) + " pm without fpm");
      return;
    }
    if (with_oracle && !(mu == mu_f_by_deficiency(g)))
      detail::note_violation(r, to_graph6(g) + " oracle mismatch");
  };
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) { check(g, true); });
  std::mt19937_64 rng(seed + 9);
  for (int i = 0; i < random_samples; ++i) {
    int n = detail::rnd_int(rng, 7, 12);
    check(detail::random_graph(rng, n, 0.2 + 0.7 * detail::rnd01(rng)), n <= 8);
  }
  return r;
}

// Every emitted certificate or witness revalidates against its graph:
// fractional-perfect-matching certificates, no-FPM subset witnesses,
// optimal deletion witnesses, and the 0/1 classification's evidence.
inline PropertyResult prop_certificates_revalidate(
    std::uint64_t seed = kDefaultSeed, int random_samples = 300) {
  PropertyResult r{"certificates-revalidate"};
  auto check = [&](const Graph& g) {
    ++r.checked;
    FpmResult fr = has_fpm_certified(g, g.order() <= 12);
    if (auto why = check_fpm_result(g, fr)) {
      detail::note_violation(r, to_graph6(g) + " fpm: " + *why);
      return;
    }
    PreclusionResult pr = fmp(g);
    if (pr.witness) {
      if (auto why = check_fmp_witness(g, *pr.witness, pr.value)) {
        detail::note_violation(r, to_graph6(g) + " fmp: " + *why);
        return;
      }
    } else if (pr.value != 0) {
      detail::note_violation(r, to_graph6(g) + " fmp missing witness");
      return;
    }
    Fmp01Result cl = classify_fmp01(g);
    if (auto why = check_fmp01_result(g, cl))
      detail::note_violation(r, to_graph6(g) + " classify: " + *why);
  };
  for (int n = 1; n <= 5; ++n)
    enumerate_graphs(n, EnumerationOptions{{}, n, 0, {}},
                     [&](const Graph& g, std::uint64_t) { check(g); });
  std::mt19937_64 rng(seed + 10);
  for (int i = 0; i < random_samples; ++i)
    check(detail::random_graph(rng, detail::rnd_int(rng, 6, 12),
                               0.2 + 0.7 * detail::rnd01(rng)));
  return r;
}

inline std::vector<PropertyResult> run_all_properties(
    std::uint64_t seed = kDefaultSeed) {
  return {
      prop_spanning_subgraph_monotone(seed),
      prop_single_edge_drop(seed),
      prop_even_mp_le_fmp(seed),
      prop_even_mp_le_delta(seed),
      prop_even_mp_delta_pinch(seed),
      prop_union_min(seed),
      prop_min_degree_bound(seed),
      prop_fmp_range(seed),
      prop_dirac(seed),
      prop_ore(seed),
      prop_mu_f(seed),
      prop_certificates_revalidate(seed),
  };
}

// The five disjoint observations about the preclusion number bundled as a
// single suite: monotone under spanning subgraphs, drop by at most one per
// edge, even-order integral lower bound, the pinch at minimum degree, and
// the disjoint-union minimum rule.
inline std::vector<PropertyResult> run_basic_observations(
    std::uint64_t seed = kDefaultSeed) {
  return {
      prop_spanning_subgraph_monotone(seed),
      prop_single_edge_drop(seed),
      prop_even_mp_le_fmp(seed),
      prop_even_mp_delta_pinch(seed),
      prop_union_min(seed),
  };
}

}  // namespace fmplab
