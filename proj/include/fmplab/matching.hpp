#pragma once

// Maximum matching in general graphs (blossom contraction, O(n^3)), perfect
// and near-perfect matching tests, and the odd-component subset criterion
// for perfect matchings.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"

namespace fmplab {

// A set of pairwise disjoint edges.
class Matching {
 public:
  Matching() = default;

  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::uint64_t seen = 0;
    for (const Edge& e : edges_) {
      std::uint64_t pair = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
      if (e.u >= kMaxVertices || e.v >= kMaxVertices || (seen & pair))
        throw std::invalid_argument("Matching: edges are not disjoint");
      seen |= pair;
    }
    covered_ = seen;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool covers(int v) const { return VertexSet(covered_).contains(v); }
  VertexSet covered() const { return VertexSet(covered_); }

  // Partner of v, or -1.
  int mate(int v) const {
    for (const Edge& e : edges_) {
      if (e.u == v) return e.v;
      if (e.v == v) return e.u;
    }
    return -1;
  }

 private:
  std::vector<Edge> edges_;
  std::uint64_t covered_ = 0;
};

inline bool is_valid_matching(const Graph& g, const Matching& m) {
  for (const Edge& e : m.edges())
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
      return false;
  return true;  // disjointness holds by construction
}

namespace detail {

// Blossom-contraction maximum matching. Stack-allocated state; deterministic:
// roots and neighbors are scanned in ascending vertex order.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g) : g_(g), n_(g.order()) {
    mate_.fill(-1);
    // Greedy seed: match each vertex to its first free neighbor.
    for (int v = 0; v < n_; ++v) {
      if (mate_[static_cast<std::size_t>(v)] != -1) continue;
      for (std::uint64_t b = g_.neighbor_bits(v); b;) {
        int u = std::countr_zero(b);
        b &= b - 1;
        if (mate_[static_cast<std::size_t>(u)] == -1) {
          mate_[static_cast<std::size_t>(v)] = u;
          mate_[static_cast<std::size_t>(u)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v)
      if (mate_[static_cast<std::size_t>(v)] == -1 && augment_from(v)) {
        // each success enlarges the matching by one edge
      }
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
      if (mate_[static_cast<std::size_t>(v)] > v)
        out.emplace_back(v, mate_[static_cast<std::size_t>(v)]);
    return out;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::array<bool, kMaxVertices> mark{};
    int v = a;
    for (;;) {
      v = base_[static_cast<std::size_t>(v)];
      mark[static_cast<std::size_t>(v)] = true;
      if (mate_[static_cast<std::size_t>(v)] == -1) break;
      v = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])];
    }
    v = b;
    for (;;) {
      v = base_[static_cast<std::size_t>(v)];
      if (mark[static_cast<std::size_t>(v)]) return v;
      v = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])];
    }
  }

  void mark_path(int v, int stem, int child) {
    while (base_[static_cast<std::size_t>(v)] != stem) {
      int mv = mate_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  bool augment_from(int root) {
    in_tree_.fill(false);
    parent_.fill(-1);
    for (int v = 0; v < n_; ++v) base_[static_cast<std::size_t>(v)] = v;

    in_tree_[static_cast<std::size_t>(root)] = true;
    int head = 0, tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      int v = queue_[head++];
      for (std::uint64_t b = g_.neighbor_bits(v); b;) {
        int u = std::countr_zero(b);
        b &= b - 1;
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(u)] ||
            mate_[static_cast<std::size_t>(v)] == u)
          continue;
        if (u == root ||
            (mate_[static_cast<std::size_t>(u)] != -1 &&
             parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(u)])] != -1)) {
          // Odd cycle: contract the blossom containing v and u.
          int stem = lowest_common_base(v, u);
          in_blossom_.fill(false);
          mark_path(v, stem, u);
          mark_path(u, stem, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])])
              continue;
            base_[static_cast<std::size_t>(i)] = stem;
            if (!in_tree_[static_cast<std::size_t>(i)]) {
              in_tree_[static_cast<std::size_t>(i)] = true;
              queue_[tail++] = i;
            }
          }
        } else if (parent_[static_cast<std::size_t>(u)] == -1) {
          parent_[static_cast<std::size_t>(u)] = v;
          if (mate_[static_cast<std::size_t>(u)] == -1) {
            // Augmenting path found: flip matched edges back to the root.
            int w = u;
            while (w != -1) {
              int pv = parent_[static_cast<std::size_t>(w)];
              int next = mate_[static_cast<std::size_t>(pv)];
              mate_[static_cast<std::size_t>(w)] = pv;
              mate_[static_cast<std::size_t>(pv)] = w;
              w = next;
            }
            return true;
          }
          int mu = mate_[static_cast<std::size_t>(u)];
          if (!in_tree_[static_cast<std::size_t>(mu)]) {
            in_tree_[static_cast<std::size_t>(mu)] = true;
            queue_[tail++] = mu;
          }
        }
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxVertices> mate_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
  std::array<int, kMaxVertices> queue_{};
  std::array<bool, kMaxVertices> in_tree_{};
  std::array<bool, kMaxVertices> in_blossom_{};
};

}  // namespace detail

inline Matching max_matching(const Graph& g) {
  return Matching(detail::BlossomSolver(g).edges());
}

inline int max_matching_size(const Graph& g) {
  return static_cast<int>(detail::BlossomSolver(g).edges().size());
}

inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && max_matching_size(g) == g.order() / 2;
}

// Matching covering all but exactly one vertex (odd order only).
inline bool has_almost_perfect_matching(const Graph& g) {
  return g.order() % 2 == 1 && max_matching_size(g) == (g.order() - 1) / 2;
}

// --- odd-component subset criterion ----------------------------------------

inline constexpr int kSubsetOracleCap = 20;

// Evaluates "every S has at most |S| odd components outside it" by direct
// subset enumeration. Equivalent to the existence of a perfect matching;
// kept as an independent oracle against max_matching.
inline bool pm_by_odd_component_condition(const Graph& g) {
  int n = g.order();
  if (n > kSubsetOracleCap)
    throw ResourceLimitError("pm_by_odd_component_condition: order " +
                             std::to_string(n) + " exceeds cap " +
                             std::to_string(kSubsetOracleCap));
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s)
    if (odd_component_count_masked(g, s) > std::popcount(s)) return false;
  return true;
}

// First S (smallest size, then lexicographic by vertex list) with more than
// |S| odd components outside it, if any.
inline std::optional<VertexSet> odd_component_violation(const Graph& g) {
  int n = g.order();
  if (n > kSubsetOracleCap)
    throw ResourceLimitError("odd_component_violation: order " +
                             std::to_string(n) + " exceeds cap " +
                             std::to_string(kSubsetOracleCap));
  std::optional<VertexSet> found;
  for (int size = 0; size <= n && !found; ++size) {
    for_each_combination(n, size, [&](const std::vector<int>&, std::uint64_t mask) {
      if (odd_component_count_masked(g, mask) > size) {
        found = VertexSet(mask);
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace fmplab
