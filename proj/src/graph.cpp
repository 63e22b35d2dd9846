#include "wcpoly/graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wcpoly/errors.hpp"

namespace wcpoly {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("graph order must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMask Graph::neighbor_mask(Vertex v) const {
  if (order() > kMaskVertices) {
    throw ResourceError("graph of order " + std::to_string(order()) +
                        " exceeds the 64-vertex bit-set representation");
  }
  VertexMask m = 0;
  for (Vertex u : adj_.at(v)) m |= VertexMask{1} << u;
  return m;
}

std::vector<VertexMask> Graph::adjacency_masks() const {
  std::vector<VertexMask> out(adj_.size());
  for (Vertex v = 0; v < order(); ++v) out[v] = neighbor_mask(v);
  return out;
}

VertexMask Graph::all_vertices_mask() const {
  if (order() > kMaskVertices) {
    throw ResourceError("graph of order " + std::to_string(order()) +
                        " exceeds the 64-vertex bit-set representation");
  }
  return order() == kMaskVertices ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
}

// ---- graph6 --------------------------------------------------------------

namespace {

constexpr int kGraph6MaxShort = 62;

std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6 long form (n > 62) is not supported", 0);
  if (header < 63 || header > 126) throw ParseError("graph6 length byte out of range 63..126", 0);
  const int n = header - 63;
  if (n > kGraph6MaxShort) throw ParseError("graph6 order exceeds 62", 0);

  const std::size_t body = graph6_body_length(n);
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 character out of range 63..126", i);
  }
  if (text.size() < 1 + body) throw ParseError("graph6 string truncated", text.size());
  if (text.size() > 1 + body) throw ParseError("trailing characters after graph6 data", 1 + body);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (value & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int value = static_cast<unsigned char>(text[body]) - 63;
    if (value & ((1 << (6 - bit % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", body);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxShort) throw DomainError("graph6 short form holds at most 62 vertices");
  std::string out(1 + graph6_body_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("stream line: ") + e.what(), offset + e.offset());
      }
    }
    offset = end + 1;
  }
  return out;
}

// ---- edge lists ----------------------------------------------------------

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Reads the whitespace-separated integers of a line.
std::vector<long> integers(std::string_view line, std::size_t base_offset) {
  std::vector<long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("expected an integer", base_offset + i);
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(offset, end - offset);
    const std::string_view line = strip(raw);
    const std::size_t line_offset = offset + static_cast<std::size_t>(line.data() - raw.data());
    if (!line.empty()) {
      const auto values = integers(line, line_offset);
      if (!n) {
        if (values.size() != 1 || values[0] < 0) throw ParseError("first line must hold the vertex count", line_offset);
        n = static_cast<int>(values[0]);
      } else {
        if (values.size() != 2) throw ParseError("edge line must hold two vertex ids", line_offset);
        const long u = values[0], v = values[1];
        if (u < 0 || v < 0 || u >= *n || v >= *n) throw ParseError("vertex id out of range", line_offset);
        if (u == v) throw ParseError("self-loop", line_offset);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    offset = end + 1;
  }
  if (!n) throw ParseError("missing vertex count", 0);
  return Graph(*n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---- families ------------------------------------------------------------

Graph path_graph(int n) {
  if (n < 1) throw DomainError("P_n requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("C_n requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw DomainError("K_n requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  if (leaves < 1) throw DomainError("K_{1,n} requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph complete_multipartite_graph(std::span<const int> parts) {
  if (parts.empty()) throw DomainError("complete multipartite graph needs at least one part");
  std::vector<int> block;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw DomainError("every part of K_{n1,...,np} needs n_i >= 1");
    block.insert(block.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(block.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block[i] != block[j]) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph spider_graph(int legs) {
  if (legs < 2) throw DomainError("S_n requires n >= 2");
  return corona(star_graph(legs));
}

Graph centipede_graph(int n) { return corona(path_graph(n)); }

Graph corona(const Graph& g) {
  const int n = g.order();
  auto edges = g.edges();
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexMask mask) {
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (mask >> v & 1) relabel[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
  return Graph(next, edges);
}

Graph generate(const GraphFamily& family) {
  auto size = [&](std::size_t i = 0) {
    if (family.sizes.size() <= i) throw DomainError(std::string(family_name(family.kind)) + " needs a size parameter");
    return family.sizes[i];
  };
  switch (family.kind) {
    case FamilyKind::Path: return path_graph(size());
    case FamilyKind::Cycle: return cycle_graph(size());
    case FamilyKind::Complete: return complete_graph(size());
    case FamilyKind::CompleteMultipartite: return complete_multipartite_graph(family.sizes);
    case FamilyKind::Star: return star_graph(size());
    case FamilyKind::Spider: return spider_graph(size());
    case FamilyKind::Centipede: return centipede_graph(size());
    case FamilyKind::Edgeless: return edgeless_graph(size());
    case FamilyKind::CoronaOf:
      if (!family.seed) throw DomainError("corona family needs a seed graph");
      return corona(*family.seed);
  }
  throw DomainError("unknown graph family");
}

namespace {
constexpr std::array<std::pair<FamilyKind, std::string_view>, 9> kFamilyNames{{
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::CompleteMultipartite, "multipartite"},
    {FamilyKind::Star, "star"},
    {FamilyKind::Spider, "spider"},
    {FamilyKind::Centipede, "centipede"},
    {FamilyKind::Edgeless, "edgeless"},
    {FamilyKind::CoronaOf, "corona"},
}};
}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (auto [k, name] : kFamilyNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (auto [k, n] : kFamilyNames)
    if (n == name) return k;
  return std::nullopt;
}

}  // namespace wcpoly
