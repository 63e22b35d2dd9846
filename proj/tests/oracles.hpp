#pragma once

// Brute-force reference computations. They share nothing with the library
// beyond the Graph container and BigInt.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "wcpoly/graph.hpp"
#include "wcpoly/polynomial.hpp"

namespace oracle {

using wcpoly::BigInt;
using wcpoly::Graph;

inline std::vector<std::uint32_t> adjacency_bits(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

inline bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  for (std::uint32_t rest = set; rest; rest &= rest - 1) {
    const int v = __builtin_ctz(rest);
    if (adj[v] & set) return false;
  }
  return true;
}

// Coefficient k counts independent sets of size k; subset enumeration, n <= 22.
inline std::vector<long long> stable_set_counts(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_bits(g);
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (independent(adj, s)) ++counts[__builtin_popcount(s)];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

inline wcpoly::IntPolynomial independence_polynomial(const Graph& g) {
  std::vector<BigInt> c;
  for (long long v : stable_set_counts(g)) c.emplace_back(static_cast<long>(v));
  return wcpoly::IntPolynomial(std::move(c));
}

inline int alpha(const Graph& g) { return static_cast<int>(stable_set_counts(g).size()) - 1; }

// Every maximal independent set has the same size.
inline bool well_covered(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_bits(g);
  int size = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!independent(adj, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && !(adj[v] & s)) maximal = false;
    if (!maximal) continue;
    const int k = __builtin_popcount(s);
    if (size >= 0 && size != k) return false;
    size = k;
  }
  return true;
}

inline int clique_number(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_bits(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool clique = true;
    for (std::uint32_t rest = s; rest && clique; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      if ((adj[v] | (1u << v)) != (adj[v] | s)) clique = false;
    }
    if (clique) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// For cliques of the complement (stable sets of g): the sum over i-cliques Q
// of the number of j-cliques containing Q equals C(j, i) s_j.
inline bool clique_degree_identity(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_bits(g);
  std::vector<std::uint32_t> stable;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (independent(adj, s)) stable.push_back(s);
  const auto counts = stable_set_counts(g);
  const int a = static_cast<int>(counts.size()) - 1;
  for (int i = 0; i <= a; ++i) {
    for (int j = i; j <= a; ++j) {
      long long total = 0;
      for (auto q : stable) {
        if (__builtin_popcount(q) != i) continue;
        for (auto big : stable)
          if (__builtin_popcount(big) == j && (big & q) == q) ++total;
      }
      if (total != choose(j, i) * counts[j]) return false;
    }
  }
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<wcpoly::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<wcpoly::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<wcpoly::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace oracle
