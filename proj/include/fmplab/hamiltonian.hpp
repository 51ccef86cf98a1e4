#pragma once

// Hamiltonian cycle detection by dynamic programming over vertex subsets.
// State: for each subset containing vertex 0, the set of endpoints of simple
// paths that start at 0 and cover exactly that subset. Exponential in n;
// capped accordingly.

#include <cstdint>
#include <optional>
#include <vector>

#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"

namespace fmplab {

inline constexpr int kHamiltonianCap = 24;

namespace detail {

// dp indexed by (mask >> 1) since vertex 0 is always in the covered set.
inline std::vector<std::uint32_t> hamiltonian_path_table(const Graph& g) {
  int n = g.order();
  std::vector<std::uint32_t> dp(std::size_t{1} << (n - 1), 0);
  dp[0] = 1;  // path consisting of vertex 0 alone
  std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < half; ++m) {
    std::uint32_t ends = dp[static_cast<std::size_t>(m)];
    if (!ends) continue;
    std::uint64_t mask = m << 1 | 1;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint64_t cand = g.neighbor_bits(v) & ~mask;
      while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        dp[static_cast<std::size_t>(m | std::uint64_t{1} << (u - 1))] |=
            std::uint32_t{1} << u;
      }
    }
  }
  return dp;
}

inline void check_hamiltonian_cap(const Graph& g) {
  if (g.order() > kHamiltonianCap)
    throw ResourceLimitError("is_hamiltonian: order " +
                             std::to_string(g.order()) + " exceeds cap " +
                             std::to_string(kHamiltonianCap));
}

}  // namespace detail

inline bool is_hamiltonian(const Graph& g) {
  detail::check_hamiltonian_cap(g);
  int n = g.order();
  if (n < 3) return false;
  if (g.min_degree() < 2 || !is_connected(g)) return false;
  auto dp = detail::hamiltonian_path_table(g);
  std::uint32_t final_ends = dp[dp.size() - 1];
  return (final_ends & static_cast<std::uint32_t>(g.neighbor_bits(0))) != 0;
}

// A Hamiltonian cycle as a vertex sequence starting at 0 (closing edge back
// to 0 implied), or nullopt. Deterministic: smallest candidate at each step.
inline std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
  detail::check_hamiltonian_cap(g);
  int n = g.order();
  if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return std::nullopt;
  auto dp = detail::hamiltonian_path_table(g);
  std::uint32_t closers =
      dp[dp.size() - 1] & static_cast<std::uint32_t>(g.neighbor_bits(0));
  if (!closers) return std::nullopt;

  std::vector<int> rev;
  rev.reserve(static_cast<std::size_t>(n));
  int v = std::countr_zero(closers);
  std::uint64_t m = (std::uint64_t{1} << (n - 1)) - 1;  // full mask >> 1
  while (v != 0) {
    rev.push_back(v);
    std::uint64_t prev_m = m & ~(std::uint64_t{1} << (v - 1));
    std::uint32_t preds = dp[static_cast<std::size_t>(prev_m)] &
                          static_cast<std::uint32_t>(g.neighbor_bits(v));
    v = std::countr_zero(preds);
    m = prev_m;
  }
  rev.push_back(0);
  return std::vector<int>(rev.rbegin(), rev.rend());
}

}  // namespace fmplab
