#pragma once

// Exhaustive enumeration of labeled graphs on n vertices, driven by edge
// masks: bit k of a mask selects edge slot k, where slots enumerate vertex
// pairs (0,1),(0,2),...,(0,n-1),(1,2),... Masks are visited in ascending
// numeric order, which gives a fixed, documented traversal that can be
// partitioned into ranges for parallel sweeps.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"

namespace fmplab {

inline int edge_slot_count(int n) { return n * (n - 1) / 2; }

// Pair (u, v) for each edge slot, in slot order.
inline std::vector<std::pair<int, int>> edge_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  slots.reserve(static_cast<std::size_t>(edge_slot_count(n)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

inline std::uint64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> c(65, std::vector<std::uint64_t>(65, 0));
    for (int i = 0; i <= 64; ++i) {
      c[static_cast<std::size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return c;
  }();
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// Total number of labeled graphs on n vertices (requires < 64 edge slots).
inline std::uint64_t labeled_graph_count(int n) {
  int slots = edge_slot_count(n);
  if (slots >= 64)
    throw ResourceLimitError("labeled_graph_count: 2^" + std::to_string(slots) +
                             " does not fit in 64 bits");
  return std::uint64_t{1} << slots;
}

// Shared slot table plus fast mask <-> Graph conversion for one order n.
class EdgeMaskUniverse {
 public:
  explicit EdgeMaskUniverse(int n) : n_(n), slots_(edge_slots(n)) {
    if (edge_slot_count(n) > 63)
      throw ResourceLimitError(
          "EdgeMaskUniverse: needs at most 63 edge slots (order <= 11), got order " +
          std::to_string(n));
  }

  int order() const { return n_; }
  int slot_count() const { return static_cast<int>(slots_.size()); }
  const std::vector<std::pair<int, int>>& slots() const { return slots_; }

  Graph graph(std::uint64_t mask) const {
    Graph g(n_);
    for (std::uint64_t b = mask; b;) {
      int k = std::countr_zero(b);
      b &= b - 1;
      g.add_edge(slots_[static_cast<std::size_t>(k)].first,
                 slots_[static_cast<std::size_t>(k)].second);
    }
    return g;
  }

  std::uint64_t mask_of(const Graph& g) const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < slots_.size(); ++k)
      if (g.adjacent(slots_[k].first, slots_[k].second))
        mask |= std::uint64_t{1} << k;
    return mask;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> slots_;
};

struct EnumerationOptions {
  std::optional<int> max_edges;  // popcount cap applied before visiting
  int vertex_cap = 7;            // refuse larger orders unless raised by caller
  std::uint64_t begin_mask = 0;  // half-open mask range for partitioned sweeps
  std::optional<std::uint64_t> end_mask;
};

// Visits every labeled graph on n vertices (within the options' mask range)
// in ascending mask order. visit(graph, mask). An optional keep(graph, mask)
// predicate filters complete graphs; it does not prune the traversal.
template <class Keep, class Visit>
void enumerate_graphs(int n, const EnumerationOptions& opt, Keep&& keep,
                      Visit&& visit) {
  if (n < 0) throw std::invalid_argument("enumerate_graphs: negative order");
  if (n > opt.vertex_cap)
    throw ResourceLimitError("enumerate_graphs: order " + std::to_string(n) +
                             " exceeds enumeration cap " +
                             std::to_string(opt.vertex_cap));
  EdgeMaskUniverse uni(n);
  std::uint64_t total = std::uint64_t{1} << uni.slot_count();
  std::uint64_t end = opt.end_mask.value_or(total);
  if (end > total) end = total;
  for (std::uint64_t mask = opt.begin_mask; mask < end; ++mask) {
    if (opt.max_edges && std::popcount(mask) > *opt.max_edges) continue;
    Graph g = uni.graph(mask);
    if (!keep(g, mask)) continue;
    visit(g, mask);
  }
}

template <class Visit>
void enumerate_graphs(int n, const EnumerationOptions& opt, Visit&& visit) {
  enumerate_graphs(n, opt, [](const Graph&, std::uint64_t) { return true; },
                   std::forward<Visit>(visit));
}

// --- fixed edge count ------------------------------------------------------

// Number of n-vertex labeled graphs with exactly m edges.
inline std::uint64_t labeled_graph_count_with_edges(int n, int m) {
  return binomial(edge_slot_count(n), m);
}

// Mask of the rank-th m-subset of {0..slots-1} in ascending mask order
// (combinatorial number system, colex).
inline std::uint64_t combination_unrank(int slots, int m, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < slots && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
    slots = c;
  }
  return mask;
}

// Visits labeled graphs with exactly m edges, ranks [rank_begin, rank_end)
// in ascending mask order. visit(graph, mask).
template <class Visit>
void enumerate_graphs_with_edge_count(int n, int m, std::uint64_t rank_begin,
                                      std::optional<std::uint64_t> rank_end,
                                      Visit&& visit) {
  EdgeMaskUniverse uni(n);
  int slots = uni.slot_count();
  if (m < 0 || m > slots) return;
  std::uint64_t total = binomial(slots, m);
  std::uint64_t end = rank_end.value_or(total);
  if (end > total) end = total;
  if (rank_begin >= end) return;
  std::uint64_t mask = combination_unrank(slots, m, rank_begin);
  for (std::uint64_t r = rank_begin; r < end; ++r) {
    visit(uni.graph(mask), mask);
    if (m == 0) break;
    // Gosper's hack: next subset of the same size in ascending order.
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t rr = mask + c;
    mask = (((mask ^ rr) >> 2) / c) | rr;
  }
}

// --- combinations of vertices ----------------------------------------------

// Visits every k-subset of {0..n-1} in lexicographic order of the sorted
// vertex list. visit(const std::vector<int>& pick, std::uint64_t mask);
// returning false stops the sweep early. Returns false if stopped.
template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int v : pick) mask |= std::uint64_t{1} << v;
    if (!visit(static_cast<const std::vector<int>&>(pick), mask)) return false;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// --- isomorphism-invariant key ---------------------------------------------

// Degree sequence refined by iterated neighborhood label multisets. Equal
// graphs always get equal keys; unequal keys certify non-isomorphism. The
// converse does not hold, so this key may only be used to route work, never
// to decide correctness.
inline std::vector<std::uint64_t> invariant_key(const Graph& g) {
  int n = g.order();
  std::vector<std::uint64_t> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] =
      static_cast<std::uint64_t>(g.degree(v));
  std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> nbr;
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      nbr.clear();
      for (std::uint64_t b = g.neighbor_bits(v); b;) {
        int u = std::countr_zero(b);
        b &= b - 1;
        nbr.push_back(label[static_cast<std::size_t>(u)]);
      }
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = label[static_cast<std::size_t>(v)] * 0x9e3779b97f4a7c15ull + 1;
      for (std::uint64_t x : nbr) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ull;
      }
      next[static_cast<std::size_t>(v)] = h;
    }
    label = next;
  }
  std::sort(label.begin(), label.end());
  std::vector<std::uint64_t> key;
  key.reserve(label.size() + 2);
  key.push_back(static_cast<std::uint64_t>(n));
  key.push_back(static_cast<std::uint64_t>(g.edge_count()));
  key.insert(key.end(), label.begin(), label.end());
  return key;
}

}  // namespace fmplab
