#pragma once

#include <cstdint>
#include <optional>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"
#include "wcpoly/polynomial.hpp"

namespace wcpoly {

enum class PivotRule {
  MaxDegree,  // ties broken by lowest vertex id
  Random,     // uniform over the component, seeded
};

struct RecurrenceOptions {
  PivotRule pivot = PivotRule::MaxDegree;
  std::uint64_t seed = 0;
  bool closed_forms = true;  // path and cycle leaves
};

/// I(G;x) through I(G) = I(G - v) + x I(G - N[v]), split multiplicatively
/// over connected components. Forests larger than limits.indpoly_max are
/// handed to the rooted DP; other graphs past that cap throw ResourceError.
IntPolynomial independence_polynomial(const Graph& g, const Limits& limits = {});
IntPolynomial independence_polynomial(const Graph& g, const RecurrenceOptions& options,
                                      const Limits& limits = {});

/// Rooted DP keeping (root excluded, root included) per vertex. Throws
/// DomainError when t has a cycle.
IntPolynomial independence_polynomial_tree(const Graph& t, const Limits& limits = {});

/// I(G;1), the number of stable sets including the empty one.
BigInt count_stable_sets(const Graph& g, const Limits& limits = {});

/// Closed forms used as recurrence leaves; exposed for tests.
IntPolynomial path_leaf_polynomial(int vertices);
IntPolynomial cycle_leaf_polynomial(int vertices);

}  // namespace wcpoly
