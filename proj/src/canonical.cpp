#include "wcpoly/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "wcpoly/errors.hpp"
#include "wcpoly/predicates.hpp"

namespace wcpoly {

namespace {

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n == 1) return {0};
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Graph& t, int root) {
  // Post-order over an explicit stack; children codes sorted at each vertex.
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> children(static_cast<std::size_t>(n));
  std::vector<std::string> code(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    if (v != root) {
      children[parent[v]].push_back(std::move(s));
    } else {
      code[v] = std::move(s);
    }
    kids.clear();
  }
  return code[root];
}

// Largest upper-triangle adjacency string over relabelings that list vertices
// by nonincreasing degree. Bits are ordered column by column as in graph6.
class AdjacencyStringSearch {
 public:
  explicit AdjacencyStringSearch(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {
    degree_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    required_ = degree_;
    std::sort(required_.begin(), required_.end(), std::greater<>());
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    current_.assign(bits, 0);
    best_.assign(bits, 0);
    perm_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::string run() {
    search(0, 0, false);
    std::string out = "G";
    out += static_cast<char>(n_);
    unsigned char byte = 0;
    for (std::size_t i = 0; i < best_.size(); ++i) {
      byte = static_cast<unsigned char>(byte << 1 | best_[i]);
      if (i % 8 == 7) {
        out += static_cast<char>(byte);
        byte = 0;
      }
    }
    if (best_.size() % 8 != 0) out += static_cast<char>(byte << (8 - best_.size() % 8));
    return out;
  }

 private:
  // Returns true when best_ was replaced somewhere below this node.
  bool search(int pos, VertexMask used, bool equal_prefix) {
    if (pos == n_) {
      if (!have_best_ || !equal_prefix) {
        best_ = current_;
        have_best_ = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    const std::size_t offset = static_cast<std::size_t>(pos) * (pos - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if (used >> v & 1 || degree_[v] != required_[pos]) continue;
      int cmp = 0;
      for (int i = 0; i < pos; ++i) {
        const auto b = static_cast<unsigned char>(adj_[perm_[i]] >> v & 1);
        current_[offset + i] = b;
        if (cmp == 0 && have_best_ && equal_prefix && b != best_[offset + i]) cmp = b > best_[offset + i] ? 1 : -1;
      }
      if (cmp < 0) continue;
      perm_[pos] = v;
      const bool eq = have_best_ && equal_prefix && cmp == 0;
      if (search(pos + 1, used | VertexMask{1} << v, eq)) {
        updated = true;
        equal_prefix = true;  // our prefix now coincides with the new best
      }
    }
    return updated;
  }

  int n_;
  std::vector<VertexMask> adj_;
  std::vector<int> degree_;
  std::vector<int> required_;
  std::vector<int> perm_;
  std::vector<unsigned char> current_;
  std::vector<unsigned char> best_;
  bool have_best_ = false;
};

}  // namespace

std::string tree_code(const Graph& t) {
  if (!is_tree(t)) throw DomainError("tree_code requires a tree");
  std::string best;
  for (int c : tree_centers(t)) {
    std::string code = rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::string canonical_code(const Graph& g, const Limits& limits) {
  if (g.order() == 0) return "E";
  if (is_forest(g)) {
    if (is_connected(g)) return "T" + tree_code(g);
    std::vector<std::string> parts;
    for (VertexMask comp : connected_components(g)) parts.push_back(tree_code(induced_subgraph(g, comp)));
    std::sort(parts.begin(), parts.end());
    std::string out = "F";
    for (const auto& p : parts) out += p + "|";
    return out;
  }
  if (g.order() > limits.canonical_max) {
    throw ResourceError("canonical_code: order " + std::to_string(g.order()) + " exceeds the cap of " +
                        std::to_string(limits.canonical_max) + " for graphs with cycles");
  }
  return AdjacencyStringSearch(g).run();
}

bool isomorphic_by_search(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      taken[w] = 1;
      if (extend(v + 1)) return true;
      taken[w] = 0;
    }
    return false;
  };
  return extend(0);
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxTreeEnumeration) {
    throw DomainError("enumerate_trees supports 1 <= n <= " + std::to_string(kMaxTreeEnumeration));
  }
  std::map<std::string, Graph> level{{tree_code(Graph(1)), Graph(1)}};
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      auto edges = t.edges();
      for (int v = 0; v < k; ++v) {
        edges.emplace_back(v, k);
        Graph child(k + 1, edges);
        edges.pop_back();
        next.try_emplace(tree_code(child), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxGraphEnumeration) {
    throw DomainError("enumerate_graphs supports 1 <= n <= " + std::to_string(kMaxGraphEnumeration) +
                      "; ingest larger orders from graph6 streams");
  }
  Limits limits;
  limits.canonical_max = kMaxGraphEnumeration;
  std::map<std::string, Graph> level{{canonical_code(Graph(1), limits), Graph(1)}};
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [code, g] : level) {
      const auto base = g.edges();
      for (VertexMask subset = 0; subset < (VertexMask{1} << k); ++subset) {
        auto edges = base;
        for (int v = 0; v < k; ++v)
          if (subset >> v & 1) edges.emplace_back(v, k);
        Graph child(k + 1, edges);
        next.try_emplace(canonical_code(child, limits), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace wcpoly
