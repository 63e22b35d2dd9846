#pragma once

#include <string>
#include <vector>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"

namespace wcpoly {

/// Isomorphism-invariant byte string: equal codes iff isomorphic.
///
/// Forests use rooted-center (AHU) strings of their components and accept
/// any order up to 64. Other graphs take the lexicographically largest
/// upper-triangle adjacency string over all degree-ordered relabelings,
/// capped at limits.canonical_max vertices (ResourceError beyond).
std::string canonical_code(const Graph& g, const Limits& limits = {});

/// AHU string of a tree rooted at its center(s). Requires a tree.
std::string tree_code(const Graph& t);

/// Explicit search for a degree-preserving bijection that maps edges to
/// edges. Independent of canonical_code; intended for n <= 10.
bool isomorphic_by_search(const Graph& a, const Graph& b);

/// One representative per isomorphism class of trees on n vertices,
/// 1 <= n <= 16, ordered by tree_code. Built by leaf augmentation.
std::vector<Graph> enumerate_trees(int n);

/// One representative per isomorphism class of graphs on n vertices,
/// 1 <= n <= 7, ordered by canonical_code. Larger orders are ingested from
/// graph6 streams.
std::vector<Graph> enumerate_graphs(int n);

inline constexpr int kMaxTreeEnumeration = 16;
inline constexpr int kMaxGraphEnumeration = 7;

}  // namespace wcpoly
