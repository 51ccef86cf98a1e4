#pragma once

// Text codecs: graph6 strings and a plain "n m" / "u v" edge-list format.
//
// graph6 layout: a header encoding the order (one byte n+63 for n <= 62,
// or '~' plus three bytes holding n as an 18-bit big-endian value), then the
// upper triangle of the adjacency matrix read column by column (for each
// column j, rows i < j), packed six bits per byte, high bit first, zero
// padded, each byte offset by 63 into the printable range.

#include <cstdint>
#include <string>
#include <string_view>

#include "fmplab/errors.hpp"
#include "fmplab/graph.hpp"

namespace fmplab {

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  if (s.empty()) throw ParseError("graph6: empty string", 0);
  std::size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = s[0] - 63;
    if (n < 0 || n > 62)
      throw ParseError("graph6: header byte out of range", 0);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw ResourceLimitError(
          "graph6: 8-byte order form implies order > 64 (cap 64)");
    if (s.size() < 4) throw ParseError("graph6: truncated order field", s.size());
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) {
      int d = s[i] - 63;
      if (d < 0 || d > 63)
        throw ParseError("graph6: order byte out of range", i);
      n = n << 6 | d;
    }
    if (n <= 62) throw ParseError("graph6: non-canonical long order field", 1);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw ResourceLimitError("graph6: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxVertices));
  long long bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != pos + body)
    throw ParseError("graph6: expected " + std::to_string(pos + body) +
                         " bytes, got " + std::to_string(s.size()),
                     s.size() < pos + body ? s.size() : pos + body);

  Graph g(static_cast<int>(n));
  long long bit = 0;
  int i = 0, j = 1;
  for (std::size_t at = pos; at < s.size(); ++at) {
    int d = s[at] - 63;
    if (d < 0 || d > 63)
      throw ParseError("graph6: body byte out of range", at);
    for (int k = 5; k >= 0; --k, ++bit) {
      int b = d >> k & 1;
      if (bit < bits) {
        if (b) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (b) {
        throw ParseError("graph6: nonzero padding bit", at);
      }
    }
  }
  return g;
}

// --- edge-list text --------------------------------------------------------

namespace detail {

struct IntScanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() &&
           (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == s.size();
  }

  long long next(const char* what) {
    skip_space();
    std::size_t start = pos;
    if (pos == s.size())
      throw ParseError(std::string("edge list: missing ") + what, start);
    bool neg = false;
    if (s[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos == s.size() || s[pos] < '0' || s[pos] > '9')
      throw ParseError(std::string("edge list: expected integer for ") + what,
                       start);
    long long val = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      val = val * 10 + (s[pos] - '0');
      if (val > (1ll << 40)) throw ParseError("edge list: integer too large", start);
      ++pos;
    }
    return neg ? -val : val;
  }
};

}  // namespace detail

// Parses "n m" followed by m lines "u v" with 0-indexed endpoints.
inline Graph from_edge_list(std::string_view text) {
  detail::IntScanner sc{text};
  long long n = sc.next("order");
  if (n < 0) throw ParseError("edge list: negative order", 0);
  if (n > kMaxVertices)
    throw ResourceLimitError("edge list: order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxVertices));
  long long m = sc.next("edge count");
  if (m < 0) throw ParseError("edge list: negative edge count", sc.pos);
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    std::size_t at = sc.pos;
    long long u = sc.next("endpoint");
    long long v = sc.next("endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: endpoint out of range", at);
    if (u == v) throw ParseError("edge list: self-loop", at);
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list: duplicate edge", at);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!sc.at_end()) throw ParseError("edge list: trailing data", sc.pos);
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace fmplab
