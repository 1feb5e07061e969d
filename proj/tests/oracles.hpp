#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond the Graph container.

#include <cstdint>
#include <random>
#include <vector>

#include "critlab/graph.hpp"

namespace oracle {

/// Whether E(G) splits into k matchings, by inclusion-exclusion:
///   #(k-tuples of matchings covering E) = sum_S (-1)^{|E-S|} m(S)^k
/// where m(S) counts matchings inside S. The count is below 2^128, so
/// wrapping unsigned arithmetic returns it exactly. Needs |E| <= 22.
inline bool k_edge_colorable(const critlab::Graph& g, int k) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return true;
  if (k <= 0) return false;
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::uint32_t> count(std::size_t{1} << m, 0);
  // f(T) = 1 when T is a matching; T is built from T minus its top edge.
  count[0] = 1;
  std::vector<std::uint64_t> covered(std::size_t{1} << m, 0);
  for (std::uint32_t t = 1; t <= full; ++t) {
    const int top = 31 - __builtin_clz(t);
    const std::uint32_t rest = t & ~(1u << top);
    const std::uint64_t ends = (std::uint64_t{1} << edges[top].u) | (std::uint64_t{1} << edges[top].v);
    if (count[rest] && !(covered[rest] & ends)) {
      count[t] = 1;
      covered[t] = covered[rest] | ends;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (s & (1u << i)) count[s] += count[s ^ (1u << i)];
    }
  }
  unsigned __int128 total = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    unsigned __int128 term = 1;
    for (int j = 0; j < k; ++j) term *= count[s];
    const bool negative = ((m - __builtin_popcount(s)) & 1) != 0;
    total = negative ? total - term : total + term;
  }
  return total != 0;
}

/// Smallest k with k_edge_colorable, scanning from Delta(G) upward.
inline int chromatic_index(const critlab::Graph& g) {
  if (g.size() == 0) return 0;
  int k = g.max_degree();
  while (!k_edge_colorable(g, k)) ++k;
  return k;
}

/// alpha(G) over all 2^n vertex subsets. Needs n <= 24.
inline int independence_number(const critlab::Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((s >> v & 1) && (adj[v] & s)) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

/// Delta-critical by definition: connected, class 2 and every G - e is
/// Delta(G)-colorable.
inline bool delta_critical(const critlab::Graph& g) {
  if (g.size() == 0 || !g.connected()) return false;
  const int delta = g.max_degree();
  if (k_edge_colorable(g, delta)) return false;
  for (const auto& e : g.edges()) {
    if (!k_edge_colorable(g.without_edge(e.u, e.v), delta)) return false;
  }
  return true;
}

/// G(n, p) with a fixed seed.
inline critlab::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<critlab::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return critlab::Graph(n, std::move(edges));
}

}  // namespace oracle
