#pragma once

#include <optional>
#include <vector>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"

namespace wcpoly {

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexMask> connected_components(const Graph& g);
std::vector<VertexMask> connected_components(std::span<const VertexMask> adj,
                                             VertexMask within);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_complete(const Graph& g);

/// Length of a shortest cycle; nullopt for forests (infinite girth).
std::optional<int> girth(const Graph& g);

/// True iff the pendant edges (edges with an endpoint of degree 1) are
/// pairwise disjoint and cover every vertex.
bool pendant_edges_form_perfect_matching(const Graph& g);

/// Stability number by branch and bound. Throws ResourceError past
/// limits.alpha_max.
int alpha(const Graph& g, const Limits& limits = {});
int alpha(std::span<const VertexMask> adj, VertexMask within);

/// Largest clique size.
int clique_number(const Graph& g, const Limits& limits = {});

/// Every maximal stable set has size alpha(g). Throws ResourceError past
/// limits.well_covered_max.
bool is_well_covered(const Graph& g, const Limits& limits = {});

/// Well-covered, no isolated vertices, and order exactly 2 alpha(g).
bool is_very_well_covered(const Graph& g, const Limits& limits = {});

/// No induced K_{1,3}.
bool is_claw_free(const Graph& g);

/// K_{1,n} for some n >= 1.
bool is_star(const Graph& g);

}  // namespace wcpoly
