#pragma once

namespace wcpoly {

/// Size caps shared by the exponential-time routines.
struct Limits {
  int alpha_max = 40;          // branch-and-bound stability number
  int well_covered_max = 24;   // maximal stable set enumeration
  int indpoly_max = 40;        // decomposition recurrence, general graphs
  int forest_max = 64;         // rooted DP for forests
  int canonical_max = 10;      // permutation search for non-forests

  /// Defaults, overridden by WCPOLY_ALPHA_MAX, WCPOLY_WELL_COVERED_MAX,
  /// WCPOLY_INDPOLY_MAX, WCPOLY_FOREST_MAX and WCPOLY_CANONICAL_MAX.
  static Limits from_env();
};

}  // namespace wcpoly
