#include "wcpoly/indpoly.hpp"

#include <bit>
#include <random>

#include "wcpoly/errors.hpp"
#include "wcpoly/predicates.hpp"

namespace wcpoly {

namespace {

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

// C(m, k) for the small arguments used by the path leaves.
BigInt choose(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

class Recurrence {
 public:
  Recurrence(std::span<const VertexMask> adj, const RecurrenceOptions& options)
      : adj_(adj), options_(options), rng_(options.seed) {}

  IntPolynomial run(VertexMask vertices) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (VertexMask comp : connected_components(adj_, vertices)) result *= component(comp);
    return result;
  }

 private:
  IntPolynomial component(VertexMask comp) {
    const int size = std::popcount(comp);
    if (size == 1) return IntPolynomial{1, 1};
    if (options_.closed_forms) {
      int edges2 = 0;
      int max_degree = 0;
      for (VertexMask rest = comp; rest; rest &= rest - 1) {
        const int d = std::popcount(adj_[lowest(rest)] & comp);
        edges2 += d;
        max_degree = std::max(max_degree, d);
      }
      if (max_degree <= 2) {
        if (edges2 / 2 == size - 1) return path_leaf_polynomial(size);
        if (edges2 / 2 == size) return cycle_leaf_polynomial(size);
      }
    }
    const int v = pivot(comp);
    // I(G) = I(G - v) + x I(G - N[v])
    IntPolynomial without = run(comp & ~bit(v));
    IntPolynomial with = run(comp & ~adj_[v] & ~bit(v)).shifted(1);
    return without + with;
  }

  int pivot(VertexMask comp) {
    if (options_.pivot == PivotRule::Random) {
      std::uniform_int_distribution<int> pick(0, std::popcount(comp) - 1);
      int skip = pick(rng_);
      VertexMask rest = comp;
      while (skip-- > 0) rest &= rest - 1;
      return lowest(rest);
    }
    int best = -1;
    int best_degree = -1;
    for (VertexMask rest = comp; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      const int d = std::popcount(adj_[v] & comp);
      if (d > best_degree) {
        best_degree = d;
        best = v;
      }
    }
    return best;
  }

  std::span<const VertexMask> adj_;
  RecurrenceOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace

IntPolynomial path_leaf_polynomial(int vertices) {
  // I(P_m) has coefficients C(m + 1 - j, j).
  std::vector<BigInt> coeffs;
  for (int j = 0; 2 * j <= vertices + 1; ++j) coeffs.push_back(choose(vertices + 1 - j, j));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial cycle_leaf_polynomial(int vertices) {
  if (vertices < 3) throw DomainError("a cycle needs at least 3 vertices");
  // I(C_m) = I(P_{m-1}) + x I(P_{m-3}), with I(P_0) = 1.
  const IntPolynomial inner = vertices == 3 ? IntPolynomial::constant(1) : path_leaf_polynomial(vertices - 3);
  return path_leaf_polynomial(vertices - 1) + inner.shifted(1);
}

IntPolynomial independence_polynomial(const Graph& g, const Limits& limits) {
  return independence_polynomial(g, RecurrenceOptions{}, limits);
}

IntPolynomial independence_polynomial(const Graph& g, const RecurrenceOptions& options, const Limits& limits) {
  if (g.order() > limits.indpoly_max) {
    if (is_forest(g)) return independence_polynomial_tree(g, limits);
    throw ResourceError("independence_polynomial: order " + std::to_string(g.order()) + " exceeds the cap of " +
                        std::to_string(limits.indpoly_max));
  }
  const auto adj = g.adjacency_masks();
  Recurrence recurrence(adj, options);
  return recurrence.run(g.all_vertices_mask());
}

IntPolynomial independence_polynomial_tree(const Graph& t, const Limits& limits) {
  if (!is_forest(t)) throw DomainError("independence_polynomial_tree requires a forest");
  if (t.order() > limits.forest_max) {
    throw ResourceError("independence_polynomial_tree: order " + std::to_string(t.order()) +
                        " exceeds the cap of " + std::to_string(limits.forest_max));
  }
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<IntPolynomial> excluded(static_cast<std::size_t>(n), IntPolynomial::constant(1));
  std::vector<IntPolynomial> included(static_cast<std::size_t>(n), IntPolynomial{0, 1});
  IntPolynomial result = IntPolynomial::constant(1);

  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> order;
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : t.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      if (v == root) continue;
      const int p = parent[v];
      excluded[p] *= excluded[v] + included[v];
      included[p] *= excluded[v];
    }
    result *= excluded[root] + included[root];
  }
  return result;
}

BigInt count_stable_sets(const Graph& g, const Limits& limits) {
  return independence_polynomial(g, limits).sum_of_coefficients();
}

}  // namespace wcpoly
