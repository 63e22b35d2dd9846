#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcpoly {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Bit set over vertex ids; valid for graphs of order at most 64.
using VertexMask = std::uint64_t;

inline constexpr int kMaskVertices = 64;

/// Simple undirected loopless graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate-free. A Graph is immutable
/// once built; every constructor validates loop-freeness and vertex range.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicate edges collapse. Throws DomainError on a loop or an
  /// out-of-range endpoint.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighborhood of v as a bit mask. Throws ResourceError when n > 64.
  VertexMask neighbor_mask(Vertex v) const;
  std::vector<VertexMask> adjacency_masks() const;
  VertexMask all_vertices_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// ---- text formats -------------------------------------------------------

/// Decodes a short-form graph6 line (n <= 62). Throws ParseError naming the
/// offending byte offset.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Parses "n" followed by "u v" lines; blank lines and '#' comments ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// One graph per non-empty line.
std::vector<Graph> parse_graph6_stream(std::string_view text);

// ---- families -----------------------------------------------------------

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  CompleteMultipartite,
  Star,
  Spider,
  Centipede,
  Edgeless,
  CoronaOf,
};

struct GraphFamily {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> sizes;       // n, or part sizes for CompleteMultipartite
  std::optional<Graph> seed;    // CoronaOf only
};

/// Labelings: path 0-1-...-(n-1); cycle closes (n-1)-0; star center 0;
/// multipartite parts are consecutive blocks; corona mate of i is n+i.
Graph generate(const GraphFamily& family);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph star_graph(int leaves);
Graph complete_multipartite_graph(std::span<const int> parts);
Graph spider_graph(int legs);
Graph centipede_graph(int n);

/// G*: vertices 0..n-1 induce g, vertex n+i is a pendant attached to i.
Graph corona(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

/// Subgraph induced by the vertices of mask, relabeled in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask mask);

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

}  // namespace wcpoly
