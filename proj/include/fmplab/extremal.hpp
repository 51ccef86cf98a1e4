#pragma once

// Extremal studies over small graphs: the minimum size s(n, k) of a graph
// with preclusion number exactly k, the edge threshold f(n, k) beyond which
// the preclusion number is forced to at least k, the derived ceiling
// g(n, k) = s(n, k+1) - 1, a dense-regime verifier for "preclusion equals
// minimum degree", and a targeted sparse search used to pin s(n, 2).
//
// All sweeps run over labeled graphs in ascending edge-mask order, split
// into contiguous rank chunks so they can be parallelized and, on budget
// exhaustion, report exactly which prefix of the space they covered.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fmplab/budget.hpp"
#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/preclusion.hpp"

namespace fmplab {

// One row of an s/f/g table.
struct ExtremalRecord {
  std::string quantity;  // "s" | "f" | "g"
  int n = 0;
  int k = 0;
  std::optional<int> value;  // set only when proven exact
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<std::string> witness_graph6;
  std::string strategy;  // exhaustive | complement | construction | derived
  std::string status;    // proven-exact | proven-empty | construction-only | inconclusive
  std::string note;
};

struct SweepOptions {
  Deadline deadline;             // default: unlimited
  int workers = 1;
  std::uint64_t chunk = 65536;   // ranks per work unit
};

namespace detail {

// Tally for one chunk of an edge-mask sweep: how many masks were visited,
// how many survived the filters, and the earliest mask the scan flagged.
struct LevelScan {
  std::uint64_t visited = 0;
  std::uint64_t kept = 0;
  std::uint64_t flag_rank = ~std::uint64_t{0};
  std::uint64_t flag_mask = 0;
  bool flagged() const { return flag_rank != ~std::uint64_t{0}; }
};

struct SweepOutcome {
  std::vector<LevelScan> chunks;  // contiguous completed prefix, in order
  std::uint64_t ranks_done = 0;
  bool complete = false;
};

// Runs process(lo, hi) over [0, total) in contiguous chunks. Workers claim
// chunk indices from a shared counter; once any chunk flags a mask, chunks
// past it are skipped (their ranks cannot host an earlier flag). Only the
// contiguous completed prefix is reported, so merged results never depend
// on scheduling; the deadline can only shorten that prefix.
template <class Process>
SweepOutcome sweep_ranks(std::uint64_t total, const SweepOptions& opt,
                         Process&& process) {
  SweepOutcome out;
  std::uint64_t chunk = opt.chunk == 0 ? 1 : opt.chunk;
  std::uint64_t n_chunks = total == 0 ? 0 : (total - 1) / chunk + 1;
  std::vector<std::optional<LevelScan>> slots(n_chunks);

  int workers = opt.workers < 1 ? 1 : opt.workers;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> flag_chunk{n_chunks};
  std::atomic<bool> out_of_time{false};

  auto body = [&]() {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= n_chunks || i > flag_chunk.load()) break;
      if (opt.deadline.expired()) {
        out_of_time.store(true);
        break;
      }
      std::uint64_t lo = i * chunk;
      std::uint64_t hi = std::min(total, lo + chunk);
      LevelScan scan = process(lo, hi);
      if (scan.flagged()) {
        std::uint64_t prev = flag_chunk.load();
        while (i < prev && !flag_chunk.compare_exchange_weak(prev, i)) {
        }
      }
      slots[i] = std::move(scan);
    }
  };

  if (workers == 1 || n_chunks <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }

  std::uint64_t done = 0;
  while (done < n_chunks && slots[done].has_value()) {
    out.chunks.push_back(*slots[done]);
    ++done;
    if (out.chunks.back().flagged()) break;  // later ranks are irrelevant
  }
  out.ranks_done = std::min(total, done * chunk);
  bool flagged = !out.chunks.empty() && out.chunks.back().flagged();
  out.complete = flagged || (done == n_chunks && !out_of_time.load());
  return out;
}

// fmp(g) == k without computing the full minimum, via the decision form.
inline bool fmp_equals(const Graph& g, int k) {
  return fmp_at_most(g, k) && !fmp_at_most(g, k - 1);
}

}  // namespace detail

// --- s(n, k): minimum size with preclusion number exactly k -------------------

struct SExactOptions {
  SweepOptions sweep;
  std::optional<int> max_edges;  // stop after this level; turns proof into bound
};

// Sweeps edge-count levels m = 0, 1, ... and within each level all labeled
// graphs on n vertices in ascending mask order, until a graph with
// preclusion number exactly k appears. Exhausting levels < m proves the
// value is >= m, so the first hit settles it; the hit with the smallest
// (level, rank) is the reported witness. Graphs with minimum degree < k are
// skipped when k >= 1: such a graph either has no fractional perfect
// matching (value 0) or loses it after at most delta < k deletions.
inline ExtremalRecord s_exact(int n, int k, const SExactOptions& opt = {}) {
  if (n < 1 || n > 9)
    throw ResourceLimitError("s_exact: order must be in 1..9");
  if (k < 0) throw std::invalid_argument("s_exact: negative k");

  ExtremalRecord rec{"s", n, k, {}, {}, {}, {}, "exhaustive", "", ""};
  int slots = edge_slot_count(n);
  int level_cap = opt.max_edges ? std::min(*opt.max_edges, slots) : slots;

  for (int m = 0; m <= level_cap; ++m) {
    std::uint64_t total = labeled_graph_count_with_edges(n, m);
    auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
      detail::LevelScan scan;
      enumerate_graphs_with_edge_count(
          n, m, lo, hi, [&](const Graph& g, std::uint64_t mask) {
            std::uint64_t rank = lo + scan.visited;
            ++scan.visited;
            if (scan.flagged()) return;
            if (k >= 1 && g.min_degree() < k) return;
            ++scan.kept;
            if (detail::fmp_equals(g, k)) {
              scan.flag_rank = rank;
              scan.flag_mask = mask;
            }
          });
      return scan;
    };
    auto outcome = detail::sweep_ranks(total, opt.sweep, scan_chunk);

    for (const auto& scan : outcome.chunks) {
      if (!scan.flagged()) continue;
      rec.value = m;
      rec.lower = m;
      rec.upper = m;
      rec.status = "proven-exact";
      rec.witness_graph6 =
          to_graph6(EdgeMaskUniverse(n).graph(scan.flag_mask));
      return rec;
    }
    if (!outcome.complete) {
      rec.lower = m;  // every level below m is exhausted
      rec.status = "inconclusive";
      rec.note = "level " + std::to_string(m) + " stopped after " +
                 std::to_string(outcome.ranks_done) + "/" +
                 std::to_string(total) + " ranks";
      return rec;
    }
  }

  if (opt.max_edges && level_cap < slots) {
    rec.lower = level_cap + 1;
    rec.status = "inconclusive";
    rec.note = "no graph with at most " + std::to_string(level_cap) +
               " edges has the target value";
    return rec;
  }
  rec.status = "proven-empty";
  rec.note = "no graph of this order has the target value";
  return rec;
}

// --- f(n, k): edge threshold forcing preclusion number >= k -------------------

struct FVerifyReport {
  ExtremalRecord record;
  bool upper_ok = false;       // every graph at or above the threshold passes
  bool witness_ok = false;     // the one-below-threshold witness fails
  bool complete = false;
  std::uint64_t graphs_checked = 0;
  std::optional<std::string> counterexample_graph6;
};

// Verifies f(n, k) = C(n-1, 2) + k. A graph with at least that many edges
// has a complement with at most n-1-k edges, so the dense side is swept in
// complement space; every such graph is connected outright, since a
// disconnected n-vertex graph has at most C(n-1, 2) edges. The lower
// witness is K_{n-1} plus a vertex with k-1 edges into it.
inline FVerifyReport f_verify(int n, int k, const SweepOptions& opt = {}) {
  if (n < 2 || n > 9)
    throw ResourceLimitError("f_verify: order must be in 2..9");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("f_verify: need 1 <= k <= n-1");

  int threshold = static_cast<int>(binomial(n - 1, 2)) + k;
  FVerifyReport rep;
  rep.record = {"f", n, k, {}, {}, {}, {}, "complement", "", ""};

  rep.upper_ok = true;
  rep.complete = true;
  for (int j = 0; j <= n - 1 - k && rep.upper_ok && rep.complete; ++j) {
    std::uint64_t total = labeled_graph_count_with_edges(n, j);
    auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
      detail::LevelScan scan;
      enumerate_graphs_with_edge_count(
          n, j, lo, hi, [&](const Graph& co, std::uint64_t mask) {
            std::uint64_t rank = lo + scan.visited;
            ++scan.visited;
            if (scan.flagged()) return;
            ++scan.kept;
            if (fmp_at_most(co.complement(), k - 1)) {
              scan.flag_rank = rank;  // dense graph below the claimed floor
              scan.flag_mask = mask;
            }
          });
      return scan;
    };
    auto outcome = detail::sweep_ranks(total, opt, scan_chunk);
    for (const auto& scan : outcome.chunks) {
      rep.graphs_checked += scan.kept;
      if (scan.flagged()) {
        rep.upper_ok = false;
        rep.counterexample_graph6 =
            to_graph6(EdgeMaskUniverse(n).graph(scan.flag_mask).complement());
        break;
      }
    }
    if (!outcome.complete) rep.complete = false;
  }

  Graph low = f_lower_witness(n, k);
  rep.witness_ok = low.edge_count() == threshold - 1 && fmp_at_most(low, k - 1);
  rep.record.witness_graph6 = to_graph6(low);

  if (rep.complete && rep.upper_ok && rep.witness_ok) {
    rep.record.value = threshold;
    rep.record.lower = threshold;
    rep.record.upper = threshold;
    rep.record.status = "proven-exact";
  } else if (!rep.complete) {
    rep.record.status = "inconclusive";
    rep.record.note = "complement sweep interrupted by budget";
  } else {
    rep.record.status = "inconclusive";
    rep.record.note = "claimed threshold falsified; see counterexample";
  }
  return rep;
}

// --- g(n, k) = s(n, k+1) - 1 ---------------------------------------------------

inline ExtremalRecord g_from_s(const ExtremalRecord& s_record) {
  if (s_record.quantity != "s")
    throw std::invalid_argument("g_from_s: input record is not an s value");
  ExtremalRecord rec = s_record;
  rec.quantity = "g";
  rec.k = s_record.k - 1;
  if (rec.value) rec.value = *rec.value - 1;
  if (rec.lower) rec.lower = *rec.lower - 1;
  if (rec.upper) rec.upper = *rec.upper - 1;
  rec.strategy = "derived";
  rec.note = "one less than the minimum size at the next preclusion value";
  return rec;
}

// --- dense regime: preclusion number equals minimum degree --------------------

struct ThresholdEntry {
  std::string complement_name;
  std::string graph6;
  int delta = 0;
  int fmp_value = 0;
  bool ok = false;
};

struct ThresholdReport {
  int n = 0;
  int k = 0;
  bool all_pass = false;
  std::vector<ThresholdEntry> entries;
};

namespace detail {

// Unlabeled graphs with maximum degree <= 2 are exactly disjoint unions of
// cycles (length >= 3), paths (>= 2 vertices), and isolated vertices; one
// representative per multiset is enough when the property being checked is
// invariant under relabeling. Emitted with cycle lengths descending, then
// path lengths descending.
struct SparseClass {
  std::vector<int> cycles;
  std::vector<int> paths;
  int isolated = 0;
};

inline void sparse_classes_rec(int left, int max_cycle, int max_path,
                               bool paths_started, SparseClass& cur,
                               std::vector<SparseClass>& out) {
  if (!paths_started) {
    for (int c = std::min(left, max_cycle); c >= 3; --c) {
      cur.cycles.push_back(c);
      sparse_classes_rec(left - c, c, max_path, false, cur, out);
      cur.cycles.pop_back();
    }
  }
  for (int p = std::min(left, max_path); p >= 2; --p) {
    cur.paths.push_back(p);
    sparse_classes_rec(left - p, max_cycle, p, true, cur, out);
    cur.paths.pop_back();
  }
  cur.isolated = left;
  out.push_back(cur);
}

// max_degree: 0 = empty graph only, 1 = matchings, 2 = paths and cycles.
inline std::vector<SparseClass> sparse_classes(int n, int max_degree) {
  std::vector<SparseClass> out;
  if (max_degree <= 0) {
    out.push_back({{}, {}, n});
    return out;
  }
  if (max_degree == 1) {
    for (int j = 0; j <= n / 2; ++j) {
      SparseClass c;
      for (int i = 0; i < j; ++i) c.paths.push_back(2);
      c.isolated = n - 2 * j;
      out.push_back(c);
    }
    return out;
  }
  SparseClass cur;
  sparse_classes_rec(n, n, n, false, cur, out);
  return out;
}

inline Graph sparse_class_graph(int n, const SparseClass& c) {
  Graph g(0);
  for (int len : c.cycles) g = disjoint_union(g, cycle_graph(len));
  for (int len : c.paths) g = disjoint_union(g, path_graph(len));
  g = disjoint_union(g, empty_graph(c.isolated));
  if (g.order() != n) throw std::logic_error("sparse class order mismatch");
  return g;
}

inline std::string sparse_class_name(const SparseClass& c) {
  std::string s;
  auto add = [&s](const std::string& part) {
    if (!s.empty()) s += "+";
    s += part;
  };
  for (int len : c.cycles) add("C" + std::to_string(len));
  for (int len : c.paths) add("P" + std::to_string(len));
  if (c.isolated > 0)
    add((c.isolated > 1 ? std::to_string(c.isolated) : std::string()) + "K1");
  if (s.empty()) s = "0";
  return s;
}

}  // namespace detail

// Checks that every graph of order n with minimum degree >= n-k has
// preclusion number equal to its minimum degree. Such graphs are the
// complements of graphs with maximum degree <= k-1, and both quantities are
// invariant under relabeling, so one representative per complement class
// suffices. Combined with the universal bound fmp <= delta, a passing
// report pins "fmp = n-k exactly when delta = n-k" at this (n, k).
inline ThresholdReport threshold_verify(int n, int k) {
  if (n < 1 || n > 17)
    throw ResourceLimitError("threshold_verify: order must be in 1..17");
  if (k < 1 || k > 3)
    throw ResourceLimitError("threshold_verify: k must be in 1..3");

  ThresholdReport rep{n, k, true, {}};
  for (const auto& cls : detail::sparse_classes(n, k - 1)) {
    Graph co = detail::sparse_class_graph(n, cls);
    Graph g = co.complement();
    ThresholdEntry e;
    e.complement_name = detail::sparse_class_name(cls);
    e.graph6 = to_graph6(g);
    e.delta = g.min_degree();
    e.fmp_value = fmp(g).value;
    e.ok = e.fmp_value == e.delta;
    rep.all_pass = rep.all_pass && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// --- sparse search for the s(n, 2) lower bound ---------------------------------

struct S2LevelProgress {
  int edges = 0;
  std::uint64_t ranks_done = 0;
  std::uint64_t ranks_total = 0;
  std::uint64_t candidates = 0;  // graphs passing the degree filters
};

struct S2Report {
  int n = 0;
  int edge_cap = 0;  // n + 2
  bool complete = false;
  bool found = false;  // a graph with value 2 and <= edge_cap edges exists
  std::optional<std::string> counterexample_graph6;
  std::vector<S2LevelProgress> levels;
};

// Exhaustively decides whether any n-vertex graph with at most n+2 edges
// has preclusion number exactly 2. Two filters are applied, both forced by
// the target value alone: minimum degree >= 2 (an isolated vertex means
// value 0; deleting a pendant edge means value <= 1), which also forces at
// least n edges; and maximum degree <= 6, since a vertex of degree >= 7
// with all others of degree >= 2 needs (7 + 2(n-1))/2 > n + 2 edges.
inline S2Report s2_lowerbound_search(int n, const SweepOptions& opt = {}) {
  if (n < 5 || n > 11 || n % 2 == 0)
    throw ResourceLimitError("s2_lowerbound_search: order must be odd, 5..11");

  S2Report rep;
  rep.n = n;
  rep.edge_cap = n + 2;
  rep.complete = true;
  for (int m = n; m <= n + 2 && !rep.found && rep.complete; ++m) {
    std::uint64_t total = labeled_graph_count_with_edges(n, m);
    auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
      detail::LevelScan scan;
      enumerate_graphs_with_edge_count(
          n, m, lo, hi, [&](const Graph& g, std::uint64_t mask) {
            std::uint64_t rank = lo + scan.visited;
            ++scan.visited;
            if (scan.flagged()) return;
            if (g.min_degree() < 2 || g.max_degree() > 6) return;
            ++scan.kept;
            if (detail::fmp_equals(g, 2)) {
              scan.flag_rank = rank;
              scan.flag_mask = mask;
            }
          });
      return scan;
    };
    auto outcome = detail::sweep_ranks(total, opt, scan_chunk);

    S2LevelProgress prog{m, outcome.ranks_done, total, 0};
    for (const auto& scan : outcome.chunks) {
      prog.candidates += scan.kept;
      if (scan.flagged()) {
        rep.found = true;
        rep.counterexample_graph6 =
            to_graph6(EdgeMaskUniverse(n).graph(scan.flag_mask));
      }
    }
    rep.levels.push_back(prog);
    if (!outcome.complete && !rep.found) rep.complete = false;
  }
  return rep;
}

}  // namespace fmplab
