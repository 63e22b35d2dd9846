#include <doctest.h>

#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "wcpoly/canonical.hpp"
#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"

using namespace wcpoly;

TEST_SUITE("indpoly") {
  TEST_CASE("known polynomials") {
    CHECK(independence_polynomial(complete_graph(6)) == IntPolynomial{1, 6});
    CHECK(independence_polynomial(path_graph(3)) == IntPolynomial{1, 3, 1});
    CHECK(independence_polynomial(cycle_graph(7)) == IntPolynomial{1, 7, 14, 7});
    CHECK(independence_polynomial(figures::real_rooted_tree()) == IntPolynomial{1, 10, 36, 60, 47, 14});
    CHECK(independence_polynomial(figures::fork_tree()) == IntPolynomial{1, 5, 6, 2});
  }

  TEST_CASE("tree DP") {
    CHECK(independence_polynomial_tree(path_graph(4)) == IntPolynomial{1, 4, 3});
    const IntPolynomial expected{1, 10, 36, 58, 42, 12, 1};
    CHECK(independence_polynomial_tree(figures::caterpillar_pair_first()) == expected);
    CHECK(independence_polynomial_tree(figures::caterpillar_pair_second()) == expected);
    CHECK_THROWS_AS(independence_polynomial_tree(cycle_graph(5)), DomainError);
    for (int n = 1; n <= 12; ++n)
      for (const auto& t : enumerate_trees(n)) CHECK(independence_polynomial_tree(t) == independence_polynomial(t));
    // forests, including isolated vertices
    const Graph forest = disjoint_union(path_graph(5), disjoint_union(Graph(2), star_graph(3)));
    CHECK(independence_polynomial_tree(forest) == oracle::independence_polynomial(forest));
  }

  TEST_CASE("stable-set counts") {
    CHECK(count_stable_sets(path_graph(3)) == 5);
    CHECK(count_stable_sets(figures::six_vertex_tree()) == 24);
    CHECK(count_stable_sets(Graph(1)) == 2);
  }

  TEST_CASE("agrees with subset enumeration") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 400; ++t) {
      const Graph g = oracle::random_graph(1 + t % 16, 0.1 + 0.05 * (t % 12), rng);
      const IntPolynomial p = independence_polynomial(g);
      CHECK(p == oracle::independence_polynomial(g));
      CHECK(p.degree() == alpha(g));
      CHECK(p[0] == 1);
    }
  }

  TEST_CASE("pivot rule does not change the result") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
      const Graph g = oracle::random_graph(2 + t % 14, 0.3, rng);
      const IntPolynomial base = independence_polynomial(g);
      RecurrenceOptions random_pivot{PivotRule::Random, static_cast<std::uint64_t>(t), true};
      RecurrenceOptions no_leaves{PivotRule::MaxDegree, 0, false};
      CHECK(independence_polynomial(g, random_pivot) == base);
      CHECK(independence_polynomial(g, no_leaves) == base);
    }
  }

  TEST_CASE("closed-form leaves") {
    for (int m = 1; m <= 20; ++m) CHECK(path_leaf_polynomial(m) == oracle::independence_polynomial(path_graph(m)));
    for (int m = 3; m <= 20; ++m) CHECK(cycle_leaf_polynomial(m) == oracle::independence_polynomial(cycle_graph(m)));
    CHECK(independence_polynomial(Graph(5)) == IntPolynomial::one_plus_x_pow(5));
  }

  TEST_CASE("size caps") {
    Limits tight;
    tight.indpoly_max = 10;
    CHECK_THROWS_AS(independence_polynomial(cycle_graph(11), tight), ResourceError);
    CHECK_NOTHROW(independence_polynomial(path_graph(30), tight));  // forests take the tree DP
    tight.forest_max = 20;
    CHECK_THROWS_AS(independence_polynomial_tree(path_graph(21), tight), ResourceError);
    CHECK(independence_polynomial_tree(path_graph(64)).degree() == 32);
  }

  TEST_CASE("exact evaluation") {
    const IntPolynomial c7 = independence_polynomial(cycle_graph(7));
    CHECK(evaluate_exact(independence_polynomial(path_graph(4)), Rational(-1)) == 0);
    CHECK(evaluate_exact(c7, Rational(-1)) * evaluate_exact(c7, Rational(-2)) == -13);
    CHECK(evaluate_exact(c7, Rational(0)) == 1);
    CHECK(evaluate_exact(IntPolynomial{1, 3}, make_rational(-1, 3)) == 0);
  }

  TEST_CASE("ring operations") {
    CHECK(IntPolynomial{1, 2} * IntPolynomial{1, 1} == IntPolynomial{1, 3, 2});
    const IntPolynomial p{1, 10, 36, 58, 42, 12, 1};
    CHECK(p * IntPolynomial::constant(1) == p);
    CHECK(poly_shift(p, 2)[2] == 1);
    CHECK(poly_add(p, -p).is_zero());
    const Graph doubled = disjoint_union(figures::caterpillar_pair_first(), figures::caterpillar_pair_first());
    CHECK(independence_polynomial(doubled) == poly_multiply(p, p));
    CHECK(IntPolynomial{1, 0, 0}.degree() == 0);  // trailing zeros trimmed
  }

  TEST_CASE("serialization") {
    const IntPolynomial p{1, 3, 1};
    CHECK(to_text(p) == "1 + 3x + x^2");
    CHECK(to_text(IntPolynomial{}) == "0");
    CHECK(to_text(IntPolynomial{0, -1, 0, 2}) == "-x + 2x^3");
    CHECK(to_json(p).dump() == R"(["1","3","1"])");
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(parse_polynomial("[1, 3, 1]") == p);
    CHECK(parse_polynomial("1,3,1") == p);
    CHECK(parse_polynomial("1 + 3x + x^2") == p);
    CHECK(parse_polynomial("2x^3 - x") == IntPolynomial{0, -1, 0, 2});
    CHECK(parse_polynomial("123456789012345678901234567890")[0] == BigInt("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_polynomial("1,a"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("[1, 2"), ParseError);
    CHECK(polynomial_key(p) != polynomial_key(IntPolynomial{1, 31}));
  }
}
