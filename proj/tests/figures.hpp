#pragma once

// Small named graphs with known independence polynomials.

#include "wcpoly/graph.hpp"

namespace figures {

using wcpoly::Graph;

// Two trees: only the first has all roots real.
inline Graph real_rooted_tree() {
  return Graph(10, {{0, 1}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {1, 5}, {5, 9}, {2, 6}, {3, 7}});
}
inline Graph claw_tree() { return Graph(8, {{0, 1}, {3, 4}, {4, 5}, {6, 7}, {1, 4}, {4, 7}, {2, 5}}); }

// Non-isomorphic pairs with equal polynomials.
inline Graph pentagon() { return Graph(5, {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {3, 0}}); }
inline Graph triangle_with_tails() { return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 4}}); }
inline Graph six_vertex_tree() { return Graph(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}}); }
inline Graph diamond_plus_two() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}}); }

// Two trees on 10 vertices with 1 + 10x + 36x^2 + 58x^3 + 42x^4 + 12x^5 + x^6.
inline Graph caterpillar_pair_first() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {2, 7}, {3, 8}, {5, 9}});
}
inline Graph caterpillar_pair_second() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {4, 7}, {3, 8}, {8, 9}});
}

// 1 + 5x + 6x^2 + 2x^3: a tree that is not well-covered, and C_4 plus K_1.
inline Graph fork_tree() { return Graph(5, {{0, 1}, {2, 3}, {1, 3}, {3, 4}}); }
inline Graph square_plus_point() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// 1 + 6x + 4x^2: the first is not well-covered, the second is.
inline Graph ladder_with_diagonals() {
  return Graph(6, {{0, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {1, 5}, {1, 3}, {2, 4}});
}
inline Graph path_with_two_apexes() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}});
}

}  // namespace figures
