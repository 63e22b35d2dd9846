#include "wcpoly/predicates.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "wcpoly/errors.hpp"

namespace wcpoly {

namespace {

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline int lowest(VertexMask m) { return std::countr_zero(m); }
// Vertices with id greater than v.
inline VertexMask above(int v) { return v >= 63 ? 0 : ~VertexMask{0} << (v + 1); }

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceError(std::string(what) + ": order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(cap));
  }
}

// Greedy partition of cand into cliques; the count bounds the stability number.
int clique_cover_bound(std::span<const VertexMask> adj, VertexMask cand) {
  int cliques = 0;
  while (cand) {
    const int u = lowest(cand);
    cand &= ~bit(u);
    VertexMask common = cand & adj[u];
    while (common) {
      const int w = lowest(common);
      cand &= ~bit(w);
      common &= adj[w] & ~bit(w);
    }
    ++cliques;
  }
  return cliques;
}

void alpha_search(std::span<const VertexMask> adj, VertexMask cand, int size, int& best) {
  // Vertices isolated within cand belong to every maximum stable set of the rest.
  VertexMask isolated = 0;
  int pivot = -1;
  int pivot_degree = -1;
  for (VertexMask rest = cand; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    const int d = std::popcount(adj[v] & cand);
    if (d == 0) isolated |= bit(v);
    if (d > pivot_degree) {
      pivot_degree = d;
      pivot = v;
    }
  }
  size += std::popcount(isolated);
  cand &= ~isolated;
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + clique_cover_bound(adj, cand) <= best) return;
  alpha_search(adj, cand & ~adj[pivot] & ~bit(pivot), size + 1, best);
  alpha_search(adj, cand & ~bit(pivot), size, best);
}

// Bron-Kerbosch over the complement: reports the sizes of maximal stable sets.
// Returns false as soon as a size differs from the first one seen.
bool uniform_maximal_sizes(std::span<const VertexMask> non_adj, VertexMask p, VertexMask x, int size,
                           int& seen) {
  if (p == 0 && x == 0) {
    if (seen < 0) seen = size;
    return seen == size;
  }
  int pivot = -1;
  int pivot_score = -1;
  for (VertexMask rest = p | x; rest; rest &= rest - 1) {
    const int u = lowest(rest);
    const int score = std::popcount(p & non_adj[u]);
    if (score > pivot_score) {
      pivot_score = score;
      pivot = u;
    }
  }
  for (VertexMask rest = p & ~non_adj[pivot]; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    if (!uniform_maximal_sizes(non_adj, p & non_adj[v], x & non_adj[v], size + 1, seen)) return false;
    p &= ~bit(v);
    x |= bit(v);
  }
  return true;
}

}  // namespace

std::vector<VertexMask> connected_components(std::span<const VertexMask> adj, VertexMask within) {
  std::vector<VertexMask> out;
  while (within) {
    VertexMask comp = bit(lowest(within));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  const auto adj = g.adjacency_masks();
  return connected_components(adj, g.all_vertices_mask());
}

namespace {

int component_count(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  int count = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_forest(const Graph& g) {
  return g.size() + static_cast<std::size_t>(component_count(g)) == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order()); }

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          const int length = dist[v] + dist[w] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

bool pendant_edges_form_perfect_matching(const Graph& g) {
  std::vector<int> covered(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == 1 || g.degree(v) == 1) {
      ++covered[u];
      ++covered[v];
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

int alpha(std::span<const VertexMask> adj, VertexMask within) {
  int total = 0;
  for (VertexMask comp : connected_components(adj, within)) {
    int best = 0;
    alpha_search(adj, comp, 0, best);
    total += best;
  }
  return total;
}

int alpha(const Graph& g, const Limits& limits) {
  check_cap(g.order(), limits.alpha_max, "alpha");
  const auto adj = g.adjacency_masks();
  return alpha(adj, g.all_vertices_mask());
}

int clique_number(const Graph& g, const Limits& limits) {
  if (g.order() == 0) return 0;
  return alpha(complement(g), limits);
}

bool is_well_covered(const Graph& g, const Limits& limits) {
  check_cap(g.order(), limits.well_covered_max, "well-covered test");
  if (g.order() == 0) return true;
  const auto adj = g.adjacency_masks();
  const VertexMask all = g.all_vertices_mask();
  // A graph is well-covered iff each component is.
  for (VertexMask comp : connected_components(adj, all)) {
    std::vector<VertexMask> non_adj(adj.size());
    for (int v = 0; v < g.order(); ++v) non_adj[v] = comp & ~adj[v] & ~bit(v);
    int seen = -1;
    if (!uniform_maximal_sizes(non_adj, comp, 0, 0, seen)) return false;
  }
  return true;
}

bool is_very_well_covered(const Graph& g, const Limits& limits) {
  if (g.order() == 0 || has_isolated_vertex(g)) return false;
  if (g.order() % 2 != 0) return false;
  return is_well_covered(g, limits) && g.order() == 2 * alpha(g, limits);
}

bool is_claw_free(const Graph& g) {
  const auto adj = g.adjacency_masks();
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask nbrs = adj[v];
    for (VertexMask a_rest = nbrs; a_rest; a_rest &= a_rest - 1) {
      const int a = lowest(a_rest);
      for (VertexMask b_rest = nbrs & ~adj[a] & above(a); b_rest; b_rest &= b_rest - 1) {
        const int b = lowest(b_rest);
        const VertexMask third = nbrs & ~adj[a] & ~adj[b] & above(b);
        if (third) return false;
      }
    }
  }
  return true;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_tree(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

}  // namespace wcpoly
