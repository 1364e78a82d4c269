#ifndef DICHRO_TESTS_ORACLES_HPP
#define DICHRO_TESTS_ORACLES_HPP

// Reference implementations that share no code with the library: plain
// digit arithmetic, dense matrices, exhaustive enumeration. Only for small
// instances.

#include <cstdint>
#include <vector>

#include "dichro/dichro.hpp"

namespace oracle {

using dichro::Code;

// Base-n digits, most significant first.
inline std::vector<unsigned> digits(Code code, unsigned n, unsigned d) {
  std::vector<unsigned> out(d);
  for (unsigned i = d; i-- > 0;) {
    out[i] = static_cast<unsigned>(code % n);
    code /= n;
  }
  return out;
}

inline Code power(unsigned n, unsigned d) {
  Code r = 1;
  while (d--) r *= n;
  return r;
}

// The edge rule read straight off the digits.
inline bool edge(unsigned n, unsigned d, Code u, Code v) {
  const auto a = digits(u, n, d);
  const auto b = digits(v, n, d);
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] != b[i]) return b[i] == (a[i] + 1) % n;
  }
  return false;
}

// Dense adjacency matrix of D(n, d).
inline std::vector<std::vector<bool>> adjacency(unsigned n, unsigned d) {
  const Code V = power(n, d);
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V));
  for (Code u = 0; u < V; ++u)
    for (Code v = 0; v < V; ++v) adj[u][v] = edge(n, d, u, v);
  return adj;
}

// The subgraph induced by `mask` (bit i = code i) has a closed walk, found
// by Warshall closure.
inline bool has_cycle(const std::vector<std::vector<bool>>& adj, std::uint64_t mask) {
  const std::size_t V = adj.size();
  std::vector<std::vector<bool>> reach(V, std::vector<bool>(V));
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = 0; v < V; ++v)
      reach[u][v] = (mask >> u & 1) && (mask >> v & 1) && adj[u][v];
  for (std::size_t k = 0; k < V; ++k) {
    if (!(mask >> k & 1)) continue;
    for (std::size_t u = 0; u < V; ++u) {
      if (!reach[u][k]) continue;
      for (std::size_t v = 0; v < V; ++v)
        if (reach[k][v]) reach[u][v] = true;
    }
  }
  for (std::size_t u = 0; u < V; ++u)
    if (reach[u][u]) return true;
  return false;
}

// Counting recurrence for chi(D(n, d)). A color class is acyclic iff no
// block holds it in all n children, so a block's palette r must satisfy
// (n-1) r >= n * chi(child); spreading child palettes round-robin over
// ceil(n chi / (n-1)) colors attains it.
inline unsigned chi_recurrence(unsigned n, unsigned d) {
  std::uint64_t chi = 1;
  for (unsigned h = 1; h <= d; ++h) chi = (n * chi + n - 2) / (n - 1);
  return static_cast<unsigned>(chi);
}

}  // namespace oracle

#endif  // DICHRO_TESTS_ORACLES_HPP
