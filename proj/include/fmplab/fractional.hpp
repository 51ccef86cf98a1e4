#pragma once

// Fractional matchings. A fractional perfect matching (FPM) assigns each
// edge a weight in [0,1] so that every vertex sees total weight exactly 1.
// Half-integral weights {0, 1/2, 1} suffice, which keeps everything exact:
// the fractional matching number equals half the maximum matching size of
// the bipartite double cover, and an FPM can be read off a perfect matching
// of that cover.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmplab/enumerate.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/hamiltonian.hpp"
#include "fmplab/matching.hpp"

namespace fmplab {

// Exact small rational; fractional matching values only ever need
// denominator 1 or 2, which normalization preserves.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational halves(long long h) { return Rational(h, 2); }
  static Rational whole(long long w) { return Rational(w, 1); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a == b || a < b;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Half-integral edge weight function given by its support: each entry is an
// edge with twice its weight (1 for a half edge, 2 for a whole edge).
class HalfIntegralMatching {
 public:
  HalfIntegralMatching() = default;

  explicit HalfIntegralMatching(std::vector<std::pair<Edge, int>> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].second != 1 && entries_[i].second != 2)
        throw std::invalid_argument("HalfIntegralMatching: weight not in {1/2, 1}");
      if (i > 0 && entries_[i].first == entries_[i - 1].first)
        throw std::invalid_argument("HalfIntegralMatching: duplicate edge");
    }
  }

  const std::vector<std::pair<Edge, int>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Twice the total weight at vertex v.
  int load_twice(int v) const {
    int load = 0;
    for (const auto& [e, tw] : entries_)
      if (e.u == v || e.v == v) load += tw;
    return load;
  }

  Rational weight() const {
    long long total = 0;
    for (const auto& [e, tw] : entries_) total += tw;
    return Rational::halves(total);
  }

 private:
  std::vector<std::pair<Edge, int>> entries_;
};

// --- bipartite double cover --------------------------------------------------

// Vertices v and v+n for each v; each edge uv becomes u~(v+n) and v~(u+n).
inline Graph bipartite_double_cover(const Graph& g) {
  int n = g.order();
  if (2 * n > kMaxVertices)
    throw ResourceLimitError("bipartite_double_cover: order " +
                             std::to_string(n) +
                             " doubles past the 64-vertex cap");
  Graph b(2 * n);
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v + n);
    b.add_edge(e.v, e.u + n);
  }
  return b;
}

inline Rational fractional_matching_number(const Graph& g) {
  return Rational::halves(max_matching_size(bipartite_double_cover(g)));
}

// Independent oracle: mu_f = (n - max_S(isolated(G-S) - |S|)) / 2 by direct
// subset enumeration.
inline Rational mu_f_by_deficiency(const Graph& g) {
  int n = g.order();
  if (n > kSubsetOracleCap)
    throw ResourceLimitError("mu_f_by_deficiency: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kSubsetOracleCap));
  int worst = 0;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s)
    worst = std::max(worst, isolated_count_masked(g, s) - std::popcount(s));
  return Rational::halves(n - worst);
}

// --- FPM existence -----------------------------------------------------------

inline bool has_fpm(const Graph& g) {
  int n = g.order();
  return max_matching_size(bipartite_double_cover(g)) == n;
}

// Subset-criterion oracle: an FPM exists iff isolated(G-S) <= |S| for all S.
inline bool fpm_by_subset_condition(const Graph& g) {
  int n = g.order();
  if (n > kSubsetOracleCap)
    throw ResourceLimitError("fpm_by_subset_condition: order " +
                             std::to_string(n) + " exceeds cap " +
                             std::to_string(kSubsetOracleCap));
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s)
    if (isolated_count_masked(g, s) > std::popcount(s)) return false;
  return true;
}

// First S (smallest size, then lexicographic) with more isolated vertices in
// G - S than |S|, if any. Witnesses the absence of an FPM.
inline std::optional<VertexSet> fpm_subset_violation(const Graph& g) {
  int n = g.order();
  if (n > kSubsetOracleCap)
    throw ResourceLimitError("fpm_subset_violation: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kSubsetOracleCap));
  std::optional<VertexSet> found;
  for (int size = 0; size <= n && !found; ++size) {
    for_each_combination(n, size, [&](const std::vector<int>&, std::uint64_t mask) {
      if (isolated_count_masked(g, mask) > size) {
        found = VertexSet(mask);
        return false;
      }
      return true;
    });
  }
  return found;
}

// --- block-partition oracle ----------------------------------------------

inline constexpr int kPartitionCap = 12;

// One block of a partition certificate: either a matched pair or an
// odd-order block together with a Hamiltonian cycle of its induced graph.
struct PartitionBlock {
  std::vector<int> vertices;            // ascending
  std::optional<std::vector<int>> cycle;  // present for odd blocks (size >= 3)
};

// Partition oracle: an FPM exists iff V splits into blocks inducing either a
// single edge or an odd-order Hamiltonian subgraph. Returns the blocks of
// one such partition (deterministic reconstruction), or nullopt.
inline std::optional<std::vector<PartitionBlock>> fpm_by_partition(const Graph& g) {
  int n = g.order();
  if (n > kPartitionCap)
    throw ResourceLimitError("fpm_by_partition: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kPartitionCap));
  std::uint64_t full = g.vertex_mask();

  // Hamiltonicity of every odd-order induced subgraph of size >= 3.
  std::vector<char> ham(std::size_t{1} << n, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    int pc = std::popcount(m);
    if (pc < 3 || pc % 2 == 0) continue;
    ham[static_cast<std::size_t>(m)] = is_hamiltonian(g.induced(VertexSet(m)));
  }

  std::vector<char> ok(std::size_t{1} << n, 0);
  ok[0] = 1;
  for (std::uint64_t m = 1; m <= full && full; ++m) {
    int w = std::countr_zero(m);
    std::uint64_t wbit = std::uint64_t{1} << w;
    // pair blocks {w, u}
    std::uint64_t partners = g.neighbor_bits(w) & m;
    bool feasible = false;
    while (partners && !feasible) {
      int u = std::countr_zero(partners);
      partners &= partners - 1;
      feasible = ok[static_cast<std::size_t>(m & ~wbit & ~(std::uint64_t{1} << u))];
    }
    // odd Hamiltonian blocks containing w
    if (!feasible) {
      std::uint64_t rest = m & ~wbit;
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint64_t block = sub | wbit;
        if (ham[static_cast<std::size_t>(block)] &&
            ok[static_cast<std::size_t>(m & ~block)]) {
          feasible = true;
          break;
        }
        if (sub == 0) break;
      }
    }
    ok[static_cast<std::size_t>(m)] = feasible;
  }
  if (full && !ok[static_cast<std::size_t>(full)]) return std::nullopt;

  // Reconstruct: lowest remaining vertex picks its block, pairs first
  // (ascending partner), then odd blocks in ascending mask order.
  std::vector<PartitionBlock> blocks;
  std::uint64_t m = full;
  while (m) {
    int w = std::countr_zero(m);
    std::uint64_t wbit = std::uint64_t{1} << w;
    bool placed = false;
    std::uint64_t partners = g.neighbor_bits(w) & m;
    while (partners && !placed) {
      int u = std::countr_zero(partners);
      partners &= partners - 1;
      std::uint64_t rest = m & ~wbit & ~(std::uint64_t{1} << u);
      if (ok[static_cast<std::size_t>(rest)]) {
        blocks.push_back({{w, u}, std::nullopt});
        m = rest;
        placed = true;
      }
    }
    if (placed) continue;
    std::uint64_t rest = m & ~wbit;
    // ascending block-mask order == ascending submask value with w added
    std::vector<std::uint64_t> subs;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      subs.push_back(sub);
      if (sub == 0) break;
    }
    std::sort(subs.begin(), subs.end());
    for (std::uint64_t sub : subs) {
      std::uint64_t block = sub | wbit;
      if (!ham[static_cast<std::size_t>(block)] ||
          !ok[static_cast<std::size_t>(m & ~block)])
        continue;
      Graph induced = g.induced(VertexSet(block));
      auto cycle_local = hamiltonian_cycle(induced);
      std::vector<int> vs = VertexSet(block).to_vector();
      std::vector<int> cycle;
      for (int idx : *cycle_local) cycle.push_back(vs[static_cast<std::size_t>(idx)]);
      blocks.push_back({vs, cycle});
      m &= ~block;
      placed = true;
      break;
    }
    if (!placed) throw std::logic_error("fpm_by_partition: reconstruction failed");
  }
  return blocks;
}

// --- certificates ------------------------------------------------------------

struct NoFpmWitness {
  VertexSet s;
};

struct FpmCertificate {
  std::optional<HalfIntegralMatching> matching;          // form (a)
  std::optional<std::vector<PartitionBlock>> partition;  // form (b)
};

struct FpmResult {
  bool has;
  std::optional<FpmCertificate> certificate;  // when has
  std::optional<NoFpmWitness> witness;        // when !has and order small enough
};

namespace detail {

// Reads the half-integral FPM off a perfect matching of the double cover,
// then rewrites even half-weight cycles as alternating whole edges so the
// support is a matching plus disjoint odd cycles.
inline HalfIntegralMatching extract_fpm(const Graph& g, const Matching& cover_pm) {
  int n = g.order();
  std::array<int, kMaxVertices> mate{};
  mate.fill(-1);
  for (const Edge& e : cover_pm.edges()) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  std::vector<std::pair<Edge, int>> entries;
  for (const Edge& e : g.edges()) {
    int tw = 0;
    if (mate[static_cast<std::size_t>(e.u)] == e.v + n) ++tw;
    if (mate[static_cast<std::size_t>(e.v)] == e.u + n) ++tw;
    if (tw) entries.emplace_back(e, tw);
  }

  // Half-weight support is 2-regular; normalize its even cycles.
  std::array<std::uint64_t, kMaxVertices> half{};
  for (const auto& [e, tw] : entries)
    if (tw == 1) {
      half[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      half[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  std::vector<std::pair<Edge, int>> fixed;
  std::uint64_t visited = 0;
  for (const auto& [e, tw] : entries)
    if (tw == 2) fixed.emplace_back(e, 2);
  for (int v = 0; v < n; ++v) {
    if (half[static_cast<std::size_t>(v)] == 0 ||
        (visited >> v & 1u))
      continue;
    // walk the cycle from v toward its smaller neighbor
    std::vector<int> cyc{v};
    visited |= std::uint64_t{1} << v;
    int cur = std::countr_zero(half[static_cast<std::size_t>(v)]);
    while (cur != v) {
      cyc.push_back(cur);
      visited |= std::uint64_t{1} << cur;
      std::uint64_t next =
          half[static_cast<std::size_t>(cur)] & ~(std::uint64_t{1} << cyc[cyc.size() - 2]);
      cur = std::countr_zero(next);
    }
    if (cyc.size() % 2 == 1) {
      for (std::size_t i = 0; i < cyc.size(); ++i)
        fixed.emplace_back(Edge(cyc[i], cyc[(i + 1) % cyc.size()]), 1);
    } else {
      for (std::size_t i = 0; i < cyc.size(); i += 2)
        fixed.emplace_back(Edge(cyc[i], cyc[(i + 1) % cyc.size()]), 2);
    }
  }
  return HalfIntegralMatching(std::move(fixed));
}

}  // namespace detail

// Existence plus a certificate: a half-integral FPM (and, on request, a
// block partition) when one exists, otherwise a violating subset when the
// order admits the subset search.
inline FpmResult has_fpm_certified(const Graph& g, bool want_partition = false) {
  int n = g.order();
  Graph cover = bipartite_double_cover(g);
  Matching m = max_matching(cover);
  if (m.size() == n) {
    FpmCertificate cert;
    cert.matching = detail::extract_fpm(g, m);
    if (want_partition) cert.partition = fpm_by_partition(g);
    return {true, std::move(cert), std::nullopt};
  }
  FpmResult res{false, std::nullopt, std::nullopt};
  if (n <= kSubsetOracleCap) {
    auto s = fpm_subset_violation(g);
    if (s) res.witness = NoFpmWitness{*s};
  }
  return res;
}

// --- validation ----------------------------------------------------------

// nullopt when valid, otherwise a description of the first defect found.
inline std::optional<std::string> check_fpm_matching(const Graph& g,
                                                     const HalfIntegralMatching& m) {
  for (const auto& [e, tw] : m.entries()) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v))
      return "support edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
             ") is not an edge of the graph";
    (void)tw;
  }
  for (int v = 0; v < g.order(); ++v)
    if (m.load_twice(v) != 2)
      return "vertex " + std::to_string(v) + " has load " +
             Rational::halves(m.load_twice(v)).str() + ", want 1";
  // structure: whole edges disjoint (construction), half edges disjoint odd cycles
  std::array<int, kMaxVertices> half_deg{};
  std::array<std::uint64_t, kMaxVertices> half{};
  for (const auto& [e, tw] : m.entries())
    if (tw == 1) {
      ++half_deg[static_cast<std::size_t>(e.u)];
      ++half_deg[static_cast<std::size_t>(e.v)];
      half[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      half[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (half_deg[static_cast<std::size_t>(v)] == 0) continue;
    if (half_deg[static_cast<std::size_t>(v)] != 2)
      return "half-weight support is not a union of cycles at vertex " +
             std::to_string(v);
    if (seen >> v & 1u) continue;
    int len = 0, prev = -1, cur = v;
    do {
      seen |= std::uint64_t{1} << cur;
      std::uint64_t nb = half[static_cast<std::size_t>(cur)];
      if (prev >= 0) nb &= ~(std::uint64_t{1} << prev);
      prev = cur;
      cur = std::countr_zero(nb);
      ++len;
    } while (cur != v);
    if (len % 2 == 0)
      return "half-weight support contains an even cycle through vertex " +
             std::to_string(v);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_partition_blocks(
    const Graph& g, const std::vector<PartitionBlock>& blocks) {
  std::uint64_t covered = 0;
  for (const PartitionBlock& b : blocks) {
    std::uint64_t mask = 0;
    for (int v : b.vertices) {
      if (v < 0 || v >= g.order()) return "block vertex out of range";
      if (mask >> v & 1u) return "block repeats a vertex";
      mask |= std::uint64_t{1} << v;
    }
    if (covered & mask) return "blocks overlap";
    covered |= mask;
    if (b.vertices.size() == 2) {
      if (!g.adjacent(b.vertices[0], b.vertices[1]))
        return "pair block is not an edge";
    } else if (b.vertices.size() % 2 == 1 && b.vertices.size() >= 3) {
      if (!b.cycle) return "odd block lacks a cycle";
      const auto& cyc = *b.cycle;
      if (cyc.size() != b.vertices.size()) return "cycle length mismatch";
      std::uint64_t cyc_mask = 0;
      for (int v : cyc) cyc_mask |= std::uint64_t{1} << v;
      if (cyc_mask != mask) return "cycle does not cover its block";
      for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]))
          return "cycle uses a non-edge";
    } else {
      return "block size must be 2 or odd >= 3";
    }
  }
  if (covered != g.vertex_mask()) return "blocks do not cover every vertex";
  return std::nullopt;
}

inline std::optional<std::string> check_no_fpm_witness(const Graph& g,
                                                       const NoFpmWitness& w) {
  if (w.s.bits() & ~g.vertex_mask()) return "witness set out of range";
  if (isolated_count(g, w.s) <= w.s.size())
    return "removing S leaves only " + std::to_string(isolated_count(g, w.s)) +
           " isolated vertices, need more than " + std::to_string(w.s.size());
  return std::nullopt;
}

inline std::optional<std::string> check_fpm_certificate(const Graph& g,
                                                        const FpmCertificate& c) {
  if (!c.matching && !c.partition) return "certificate is empty";
  if (c.matching)
    if (auto err = check_fpm_matching(g, *c.matching)) return err;
  if (c.partition)
    if (auto err = check_partition_blocks(g, *c.partition)) return err;
  return std::nullopt;
}

inline std::optional<std::string> check_fpm_result(const Graph& g,
                                                   const FpmResult& r) {
  if (r.has != has_fpm(g)) return "stored answer contradicts recomputation";
  if (r.has) {
    if (!r.certificate) return "positive answer lacks a certificate";
    return check_fpm_certificate(g, *r.certificate);
  }
  if (r.witness) return check_no_fpm_witness(g, *r.witness);
  if (g.order() <= kSubsetOracleCap)
    return "negative answer lacks a witness despite small order";
  return std::nullopt;
}

}  // namespace fmplab
