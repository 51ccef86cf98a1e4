#pragma once

// Named verification suites driven by the CLI and the acceptance tests.
// Each suite re-derives a documented claim from scratch — two independent
// implementations compared over an exhaustive space, or a construction
// checked against the engines — and reports per-instance outcomes.
// Budget exhaustion is reported as inconclusive, never as pass or fail.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fmplab/budget.hpp"
#include "fmplab/enumerate.hpp"
#include "fmplab/extremal.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/matching.hpp"
#include "fmplab/preclusion.hpp"
#include "fmplab/properties.hpp"

namespace fmplab {

struct SuiteInstance {
  std::string label;
  bool pass = false;
  std::string details;
  // True when the instance was left unproven by a budget or cap, as opposed
  // to a decided failure. Undecided instances never count as falsifications.
  bool undecided = false;
};

struct SuiteReport {
  std::string id;
  bool inconclusive = false;
  std::vector<SuiteInstance> instances;

  bool pass() const {
    if (inconclusive) return false;
    for (const auto& i : instances)
      if (!i.pass) return false;
    return true;
  }
  // A decided failure dominates: a counterexample stays a counterexample no
  // matter how much of the rest of the sweep ran out of budget.
  std::string outcome() const {
    for (const auto& i : instances)
      if (!i.pass && !i.undecided) return "fail";
    if (inconclusive) return "inconclusive";
    for (const auto& i : instances)
      if (i.undecided) return "inconclusive";
    return "pass";
  }
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  bool long_run = false;  // opt into the hours-scale searches
  SweepOptions sweep;
};

namespace detail {

inline VertexSet vertex_range(int lo, int count) {
  VertexSet s;
  for (int v = lo; v < lo + count; ++v) s.insert(v);
  return s;
}

}  // namespace detail

// Complete graphs lose their fractional perfect matching only after all
// edges at some vertex go: fmp(K_n) = n - 1 for n >= 7.
inline SuiteReport suite_complete_graphs(int n_lo = 7, int n_hi = 10) {
  SuiteReport rep{"thm1_3", false, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    PreclusionResult r = fmp(complete_graph(n));
    SuiteInstance inst{"K" + std::to_string(n), r.value == n - 1,
                       "fmp=" + std::to_string(r.value)};
    rep.instances.push_back(std::move(inst));
  }
  return rep;
}

// Perfect matchings exist exactly when no vertex subset leaves more odd
// components behind than its own size; the augmenting-path engine and the
// subset sweep are compared over every labeled graph up to n_max vertices.
inline SuiteReport suite_pm_tutte_equiv(int n_max = 7,
                                        const SuiteOptions& opt = {}) {
  SuiteReport rep{"thm2_1_equiv", false, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t checked = 0, bad = 0;
    std::string first_bad;
    enumerate_graphs(
        n, EnumerationOptions{{}, n_max, 0, {}},
        [&](const Graph& g, std::uint64_t) {
          if ((checked & 1023) == 0 && opt.sweep.deadline.expired())
            throw ResourceLimitError("deadline");
          ++checked;
          if (has_perfect_matching(g) != pm_by_odd_component_condition(g)) {
            ++bad;
            if (first_bad.empty()) first_bad = to_graph6(g);
          }
        });
    rep.instances.push_back({"n=" + std::to_string(n), bad == 0,
                             "graphs=" + std::to_string(checked) +
                                 (bad ? " first=" + first_bad : "")});
  }
  return rep;
}

// Three independent answers to "is there a fractional perfect matching":
// the double-cover matching, the isolation-count subset condition, and the
// edge/odd-cycle partition, agreeing on every labeled graph up to n_max.
inline SuiteReport suite_fpm_oracle_equiv(int n_max = 6,
                                          const SuiteOptions& opt = {}) {
  SuiteReport rep{"thm2_2_equiv", false, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t checked = 0, bad = 0;
    std::string first_bad;
    enumerate_graphs(
        n, EnumerationOptions{{}, n_max, 0, {}},
        [&](const Graph& g, std::uint64_t) {
          if ((checked & 1023) == 0 && opt.sweep.deadline.expired())
            throw ResourceLimitError("deadline");
          ++checked;
          bool a = has_fpm(g);
          bool b = fpm_by_subset_condition(g);
          bool c = fpm_by_partition(g).has_value();
          if (a != b || b != c) {
            ++bad;
            if (first_bad.empty()) first_bad = to_graph6(g);
          }
        });
    rep.instances.push_back({"n=" + std::to_string(n), bad == 0,
                             "graphs=" + std::to_string(checked) +
                                 (bad ? " first=" + first_bad : "")});
  }
  return rep;
}

// Dense regime: every graph with delta >= n-k has fmp = delta (checked per
// complement class); with fmp <= delta this pins fmp = n-k iff delta = n-k.
inline SuiteReport suite_threshold(const std::string& id,
                                   const std::vector<std::pair<int, int>>& grid) {
  SuiteReport rep{id, false, {}};
  for (auto [n, k] : grid) {
    ThresholdReport tr = threshold_verify(n, k);
    rep.instances.push_back(
        {"n=" + std::to_string(n) + ",k=" + std::to_string(k), tr.all_pass,
         "classes=" + std::to_string(tr.entries.size())});
  }
  return rep;
}

namespace detail {

// For a part built from explicit one-factors: the factors must be exactly k
// pairwise edge-disjoint perfect matchings whose union is the part. Any
// k-1 deletions then miss a whole factor, so a perfect matching — hence a
// fractional one — survives, certifying fmp >= k for that part.
inline std::optional<std::string> check_factor_certificate(
    const Graph& whole, const SWitnessPart& part, int k) {
  Graph sub = whole.induced(vertex_range(part.offset, part.order));
  if (static_cast<int>(part.factors.size()) != k)
    return "expected " + std::to_string(k) + " factors, found " +
           std::to_string(part.factors.size());
  std::set<std::pair<int, int>> seen;
  for (const Matching& f : part.factors) {
    if (!is_valid_matching(sub, f)) return "factor is not a matching of the part";
    if (2 * f.size() != part.order) return "factor is not perfect";
    for (const Edge& e : f.edges())
      if (!seen.insert({e.u, e.v}).second) return "factors share an edge";
  }
  if (seen.size() != static_cast<std::size_t>(sub.edge_count()))
    return "factors do not cover the part";
  return std::nullopt;
}

}  // namespace detail

// The minimum-size constructions for preclusion number k >= 6: edge counts
// match their closed forms, the factor-built parts certify fmp >= k, and
// the exact search confirms fmp = k (the apex case only promises >= k; its
// exact value is recorded in the details).
inline SuiteReport suite_s_witness_grid(
    const std::vector<std::pair<int, int>>& grid = {
        {14, 6}, {15, 6}, {16, 6}, {17, 7}, {13, 6}}) {
  SuiteReport rep{"thm3_1", false, {}};
  for (auto [n, k] : grid) {
    SWitness w = s_witness(n, k);
    std::string label = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    bool edges_ok =
        w.graph.edge_count() == w.edge_formula &&
        (w.strategy == "apex-over-factor"
             ? w.graph.min_degree() == k + 1
             : w.graph.min_degree() == k);
    std::string cert_err;
    for (const SWitnessPart& part : w.parts) {
      if (part.kind == "factorizable") {
        if (auto err = detail::check_factor_certificate(w.graph, part, k)) {
          cert_err = *err;
          break;
        }
      } else if (part.kind == "complete" || part.kind == "near-complete") {
        Graph sub = w.graph.induced(detail::vertex_range(part.offset, part.order));
        if (fmp(sub).value != k) {
          cert_err = part.kind + " part has wrong value";
          break;
        }
      }
    }
    int exact = fmp(w.graph).value;
    bool fmp_ok = w.strategy == "apex-over-factor" ? exact >= k : exact == k;
    rep.instances.push_back(
        {label, edges_ok && cert_err.empty() && fmp_ok,
         "case=" + w.strategy + " edges=" + std::to_string(w.graph.edge_count()) +
             " fmp=" + std::to_string(exact) +
             (cert_err.empty() ? "" : " cert: " + cert_err)});
  }
  return rep;
}

// Minimum size at preclusion number one (odd order): the matching-plus-
// triangle construction attains (n+3)/2, and full exhaustion at n=7
// confirms nothing smaller works.
inline SuiteReport suite_min_size_k1(const SuiteOptions& opt = {}) {
  SuiteReport rep{"prop3_1", false, {}};
  {
    ExtremalRecord r0 = s_exact(5, 0, {opt.sweep, {}});
    rep.instances.push_back({"s(5,0)", r0.value && *r0.value == 0,
                             "status=" + r0.status});
    ExtremalRecord r = s_exact(7, 1, {opt.sweep, {}});
    bool undecided = r.status == "inconclusive";
    if (undecided) rep.inconclusive = true;
    rep.instances.push_back(
        {"s(7,1)", r.value && *r.value == 5,
         "status=" + r.status +
             (r.value ? " value=" + std::to_string(*r.value) : ""),
         undecided});
  }
  for (int n = 5; n <= 15; n += 2) {
    Graph h = h_family(n, 2);
    bool ok = h.edge_count() == (n + 3) / 2 && fmp(h).value == 1;
    rep.instances.push_back({"H2(" + std::to_string(n) + ")", ok,
                             "edges=" + std::to_string(h.edge_count())});
  }
  return rep;
}

// Minimum size at preclusion number two (odd order >= 9): the bowtie-based
// constructions attain n+3 edges, and the sparse search confirms no graph
// with fewer edges reaches value two. The n=9 search is hours-scale and
// runs only with long_run; the default run exhausts n=7, where the claim
// is outside the documented range and the search simply reports the truth.
inline SuiteReport suite_min_size_k2(const SuiteOptions& opt = {}) {
  SuiteReport rep{"thm3_3", false, {}};
  for (int n : {9, 13, 17}) {
    Graph h = h_family(n, 3);
    rep.instances.push_back({"H3(" + std::to_string(n) + ")",
                             h.edge_count() == n + 3 && fmp(h).value == 2,
                             "edges=" + std::to_string(h.edge_count())});
  }
  for (int n : {15, 19}) {
    Graph h = h_family(n, 4);
    rep.instances.push_back({"H4(" + std::to_string(n) + ")",
                             h.edge_count() == n + 3 && fmp(h).value == 2,
                             "edges=" + std::to_string(h.edge_count())});
  }
  int n = opt.long_run ? 9 : 7;
  S2Report sr = s2_lowerbound_search(n, opt.sweep);
  if (!sr.complete) rep.inconclusive = true;
  bool ok = sr.complete;
  bool decided_fail = false;
  std::string details = "edge_cap=" + std::to_string(sr.edge_cap);
  if (sr.found) {
    // Any hit must genuinely beat the bound; at n=9 a hit would falsify
    // the claimed minimum and fails the suite outright.
    Graph cex = from_graph6(*sr.counterexample_graph6);
    bool genuine = cex.edge_count() <= sr.edge_cap && fmp(cex).value == 2;
    decided_fail = !genuine || opt.long_run;
    ok = ok && genuine && !opt.long_run;
    details += " found=" + *sr.counterexample_graph6;
  } else {
    details += " found=none";
  }
  rep.instances.push_back({"search(n=" + std::to_string(n) + ")", ok, details,
                           !sr.complete && !decided_fail});
  return rep;
}

// Edge threshold forcing preclusion number k on 8 vertices, for every k.
inline SuiteReport suite_edge_threshold(int n = 8, const SuiteOptions& opt = {}) {
  SuiteReport rep{"thm3_4", false, {}};
  for (int k = 1; k <= n - 1; ++k) {
    FVerifyReport fr = f_verify(n, k, opt.sweep);
    if (!fr.complete) rep.inconclusive = true;
    int want = static_cast<int>(binomial(n - 1, 2)) + k;
    rep.instances.push_back(
        {"f(" + std::to_string(n) + "," + std::to_string(k) + ")",
         fr.record.status == "proven-exact" && fr.record.value &&
             *fr.record.value == want,
         "checked=" + std::to_string(fr.graphs_checked) +
             " status=" + fr.record.status,
         !fr.complete});
  }
  return rep;
}

// The five basic facts about the preclusion number, as randomized suites.
inline SuiteReport suite_observations(const SuiteOptions& opt = {}) {
  SuiteReport rep{"obs1_1", false, {}};
  for (const PropertyResult& r : run_basic_observations(opt.seed))
    rep.instances.push_back({r.name, r.pass(),
                             "checked=" + std::to_string(r.checked) +
                                 (r.pass() ? "" : " first=" + r.first_violation)});
  return rep;
}

inline std::vector<std::string> suite_ids() {
  return {"thm1_3",  "thm2_1_equiv", "thm2_2_equiv", "prop2_4",
          "prop2_5", "thm2_7",       "cor2_5",       "thm3_1",
          "prop3_1", "thm3_3",       "thm3_4",       "obs1_1"};
}

inline SuiteReport run_suite(const std::string& id, const SuiteOptions& opt = {}) {
  try {
    if (id == "thm1_3") return suite_complete_graphs();
    if (id == "thm2_1_equiv") return suite_pm_tutte_equiv(7, opt);
    if (id == "thm2_2_equiv") return suite_fpm_oracle_equiv(6, opt);
    if (id == "prop2_4") return suite_threshold(id, {{7, 1}, {9, 1}});
    if (id == "prop2_5") return suite_threshold(id, {{9, 2}, {11, 2}});
    if (id == "thm2_7") return suite_threshold(id, {{13, 2}});
    if (id == "cor2_5") return suite_threshold(id, {{10, 1}, {14, 2}});
    if (id == "thm3_1") return suite_s_witness_grid();
    if (id == "prop3_1") return suite_min_size_k1(opt);
    if (id == "thm3_3") return suite_min_size_k2(opt);
    if (id == "thm3_4") return suite_edge_threshold(8, opt);
    if (id == "obs1_1") return suite_observations(opt);
  } catch (const ResourceLimitError&) {
    SuiteReport rep{id, true, {}};
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + id);
}

}  // namespace fmplab
