#pragma once

// Simple undirected graphs on at most 64 labeled vertices. Each vertex keeps
// its neighborhood as one 64-bit word, so subset-heavy algorithms (component
// scans, isolated-vertex counts, induced subgraphs) are a few word ops.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fmplab/errors.hpp"

namespace fmplab {

inline constexpr int kMaxVertices = 64;

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("Edge: endpoints must differ");
    if (a < 0 || b < 0) throw std::invalid_argument("Edge: negative vertex");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of {0,...,63} as a bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  static VertexSet of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  bool contains(int v) const { return v >= 0 && v < kMaxVertices && (bits_ >> v & 1u); }

  void insert(int v) {
    if (v < 0 || v >= kMaxVertices)
      throw std::invalid_argument("VertexSet: vertex out of range");
    bits_ |= std::uint64_t{1} << v;
  }

  void erase(int v) {
    if (v >= 0 && v < kMaxVertices) bits_ &= ~(std::uint64_t{1} << v);
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b;) {
      int v = std::countr_zero(b);
      out.push_back(v);
      b &= b - 1;
    }
    return out;
  }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Finite set of edges, kept sorted and duplicate-free.
class EdgeSet {
 public:
  EdgeSet() = default;

  explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1])
        throw std::invalid_argument("EdgeSet: duplicate edge");
  }

  EdgeSet(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [a, b] : pairs) es.emplace_back(a, b);
    *this = EdgeSet(std::move(es));
  }

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order must be in [0, 64], got " +
                                  std::to_string(n));
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Graph g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)] >> v & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
    if (!(adj_[static_cast<std::size_t>(u)] & bv)) {
      adj_[static_cast<std::size_t>(u)] |= bv;
      adj_[static_cast<std::size_t>(v)] |= bu;
      ++m_;
    }
  }

  std::uint64_t neighbor_bits(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbor_bits(v)); }

  std::vector<int> neighbors(int v) const {
    return VertexSet(neighbor_bits(v)).to_vector();
  }

  int min_degree() const {
    int d = n_ > 0 ? kMaxVertices : 0;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
      while (higher) {
        int v = std::countr_zero(higher);
        out.emplace_back(u, v);
        higher &= higher - 1;
      }
    }
    return out;
  }

  std::uint64_t vertex_mask() const {
    return n_ == kMaxVertices ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n_) - 1;
  }

  Graph complement() const {
    Graph g(n_);
    std::uint64_t all = vertex_mask();
    for (int v = 0; v < n_; ++v) {
      g.adj_[static_cast<std::size_t>(v)] =
          all & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
      g.m_ += std::popcount(g.adj_[static_cast<std::size_t>(v)]);
    }
    g.m_ /= 2;
    return g;
  }

  // Subgraph induced on `keep`, relabeled to 0..|keep|-1 preserving order.
  Graph induced(VertexSet keep) const {
    std::vector<int> vs = keep.to_vector();
    if (!vs.empty() && vs.back() >= n_)
      throw std::invalid_argument("induced: vertex out of range");
    Graph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adjacent(vs[i], vs[j]))
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for order " + std::to_string(n_));
  }

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// --- structural operations -------------------------------------------------

// Removes the vertices of X and relabels the rest contiguously, preserving
// relative order.
inline Graph delete_vertices(const Graph& g, VertexSet x) {
  if (x.bits() & ~g.vertex_mask())
    throw std::invalid_argument("delete_vertices: vertex out of range");
  return g.induced(VertexSet(g.vertex_mask() & ~x.bits()));
}

inline Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw std::invalid_argument("delete_edge: not an edge of the graph");
  Graph h(g.order());
  for (const Edge& e : g.edges())
    if (!(e.u == std::min(u, v) && e.v == std::max(u, v))) h.add_edge(e.u, e.v);
  return h;
}

inline Graph delete_edges(const Graph& g, const EdgeSet& t) {
  for (const Edge& e : t.edges())
    if (!g.adjacent(e.u, e.v))
      throw std::invalid_argument("delete_edges: not an edge of the graph");
  Graph h(g.order());
  for (const Edge& e : g.edges())
    if (!t.contains(e)) h.add_edge(e.u, e.v);
  return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices)
    throw ResourceLimitError("disjoint_union: combined order exceeds 64");
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  int off = a.order();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  return g;
}

// --- component queries -----------------------------------------------------

// Connected components of G - removed, as vertex masks ordered by their
// smallest member.
inline std::vector<std::uint64_t> component_masks(const Graph& g,
                                                  std::uint64_t removed = 0) {
  std::vector<std::uint64_t> comps;
  std::uint64_t alive = g.vertex_mask() & ~removed;
  std::uint64_t seen = 0;
  while (std::uint64_t rest = alive & ~seen) {
    std::uint64_t comp = rest & (~rest + 1);  // lowest unseen vertex
    for (;;) {
      std::uint64_t frontier = comp;
      std::uint64_t grown = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grown |= g.neighbor_bits(v) & alive;
      }
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

inline int component_count(const Graph& g) {
  return static_cast<int>(component_masks(g).size());
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || component_count(g) == 1;
}

// Allocation-free cores used by subset sweeps. `removed` must stay inside
// the vertex mask; the wrappers below validate, these do not.
inline int isolated_count_masked(const Graph& g, std::uint64_t removed) {
  std::uint64_t alive = g.vertex_mask() & ~removed;
  int count = 0;
  for (std::uint64_t b = alive; b;) {
    int v = std::countr_zero(b);
    b &= b - 1;
    if ((g.neighbor_bits(v) & alive) == 0) ++count;
  }
  return count;
}

inline int odd_component_count_masked(const Graph& g, std::uint64_t removed) {
  std::uint64_t alive = g.vertex_mask() & ~removed;
  std::uint64_t seen = 0;
  int count = 0;
  while (std::uint64_t rest = alive & ~seen) {
    std::uint64_t comp = rest & (~rest + 1);
    for (;;) {
      std::uint64_t frontier = comp, grown = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grown |= g.neighbor_bits(v) & alive;
      }
      if (grown == comp) break;
      comp = grown;
    }
    if (std::popcount(comp) % 2 == 1) ++count;
    seen |= comp;
  }
  return count;
}

// Number of isolated vertices of G - S.
inline int isolated_count(const Graph& g, VertexSet s) {
  if (s.bits() & ~g.vertex_mask())
    throw std::invalid_argument("isolated_count: vertex out of range");
  return isolated_count_masked(g, s.bits());
}

// Number of odd-order components of G - S.
inline int odd_component_count(const Graph& g, VertexSet s) {
  if (s.bits() & ~g.vertex_mask())
    throw std::invalid_argument("odd_component_count: vertex out of range");
  return odd_component_count_masked(g, s.bits());
}

}  // namespace fmplab
