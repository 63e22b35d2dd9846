#include <doctest.h>

#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "wcpoly/canonical.hpp"
#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"
#include "wcpoly/transforms.hpp"

using namespace wcpoly;

namespace {

IntPolynomial random_skeleton(int n, std::mt19937_64& rng) {
  const int a = std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<BigInt> s{1};
  std::uniform_int_distribution<long> coeff(0, 5000);
  for (int k = 1; k <= a; ++k) s.emplace_back(coeff(rng));
  if (a > 0 && s.back() == 0) s.back() = 1;
  return IntPolynomial(std::move(s));
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(binomial(80, 40) == BigInt("107507208733336176461620"));
  }

  TEST_CASE("forward transform") {
    CHECK(corona_coefficients({IntPolynomial{1, 2}, 2}) == IntPolynomial{1, 4, 3});
    CHECK(corona_coefficients({IntPolynomial{1, 1}, 1}) == IntPolynomial{1, 2});
    CHECK(corona_coefficients({IntPolynomial{1}, 1}) == IntPolynomial{1, 1});
    CHECK_THROWS_AS(corona_coefficients({IntPolynomial{1, 3, 1}, 1}), DomainError);
    CHECK_THROWS_AS(corona_coefficients({IntPolynomial{2, 1}, 3}), DomainError);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
      const int n = std::uniform_int_distribution<int>(0, 12)(rng);
      const IntPolynomial s = random_skeleton(n, rng);
      const IntPolynomial c = corona_coefficients({s, n});
      CHECK(c.degree() == n);
      CHECK(c[0] == 1);
      CHECK(c[n] == s.sum_of_coefficients());
    }
  }

  TEST_CASE("inverse transform") {
    const auto r = inverse_corona_coefficients(IntPolynomial{1, 4, 3}, 2, 1);
    CHECK(r.ok());
    CHECK(r.skeleton == IntPolynomial{1, 2});
    const auto bad = inverse_corona_coefficients(IntPolynomial{1, 3, 1}, 2, 1);
    CHECK(bad.status == InverseStatus::NotCoronaImage);
    const auto negative = inverse_corona_coefficients(IntPolynomial{1, 1, 1}, 2, 2);
    CHECK(negative.status == InverseStatus::NegativeCoefficient);
    CHECK(negative.first_negative == 1);
    CHECK_THROWS_AS(inverse_corona_coefficients(IntPolynomial{1, 4, 3}, 3, 1), DomainError);
    CHECK_THROWS_AS(inverse_corona_coefficients(IntPolynomial{1, 4, 3}, 2, 3), DomainError);
    std::mt19937_64 rng(37);
    for (int t = 0; t < 1000; ++t) {
      const int n = std::uniform_int_distribution<int>(0, 12)(rng);
      const IntPolynomial s = random_skeleton(n, rng);
      const auto back = inverse_corona_coefficients(corona_coefficients({s, n}), n, s.degree());
      CHECK(back.ok());
      CHECK(back.skeleton == s);
    }
  }

  TEST_CASE("two routes to the corona polynomial") {
    for (int n = 1; n <= 10; ++n) {
      CHECK(corona_polynomial_identity(IntPolynomial{1, n}, n) == complete_corona_polynomial(n));
    }
    CHECK(corona_polynomial_identity(IntPolynomial{1}, 0) == IntPolynomial{1});
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
      const int n = std::uniform_int_distribution<int>(0, 12)(rng);
      const IntPolynomial s = random_skeleton(n, rng);
      const IntPolynomial p = corona_polynomial_identity(s, n);
      CHECK(p == corona_coefficients({s, n}));
      // (1+x)^(n - deg s) divides the result: p(x) / (1+x)^m has integer coefficients
      IntPolynomial q = p;
      for (int k = 0; k < n - s.degree(); ++k) {
        std::vector<BigInt> quotient(static_cast<std::size_t>(q.degree()), 0);
        BigInt carry = 0;
        for (int i = q.degree(); i >= 1; --i) {
          carry = q[i] - carry;
          quotient[i - 1] = carry;
        }
        CHECK(q[0] == carry);
        q = IntPolynomial(std::move(quotient));
      }
    }
  }

  TEST_CASE("triple agreement on graphs") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 150; ++t) {
      const Graph g = oracle::random_graph(1 + t % 9, 0.4, rng);
      const IntPolynomial s = independence_polynomial(g);
      const IntPolynomial direct = oracle::independence_polynomial(corona(g));
      CHECK(corona_coefficients({s, g.order()}) == direct);
      CHECK(corona_polynomial_identity(s, g.order()) == direct);
    }
  }

  TEST_CASE("functional identity") {
    const Graph k2 = complete_graph(2);
    CHECK(functional_identity_check(k2, Rational(1)));
    CHECK(evaluate_exact(independence_polynomial(path_graph(4)), Rational(-2)) == 5);
    CHECK_THROWS_AS(functional_identity_check(k2, Rational(0)), DomainError);
    CHECK_THROWS_AS(functional_identity_check(k2, Rational(-1)), DomainError);
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    for (int t = 0; t < 1000; ++t) {
      const Graph g = oracle::random_graph(1 + t % 8, 0.5, rng);
      Rational x = make_rational(num(rng), den(rng));
      if (x == 0 || x == -1) x = make_rational(7, 3);
      CHECK(functional_identity_check(g, x));
    }
  }

  TEST_CASE("spiders") {
    CHECK(spider_polynomial(2) == IntPolynomial{1, 6, 10, 5});
    CHECK_THROWS_AS(spider_polynomial(1), DomainError);
    for (int n = 2; n <= 10; ++n) {
      const IntPolynomial p = spider_polynomial(n);
      CHECK(p == oracle::independence_polynomial(corona(star_graph(n))));
      BigInt three = 1, two = 1;
      for (int i = 0; i < n; ++i) three *= 3;
      for (int i = 0; i < n - 1; ++i) two *= 2;
      CHECK(p.sum_of_coefficients() == 2 * (three + two));
    }
  }

  TEST_CASE("centipedes, paths, multipartite") {
    CHECK(centipede_polynomial(1) == IntPolynomial{1, 2});
    CHECK(centipede_polynomial(2) == IntPolynomial{1, 4, 3});
    CHECK_THROWS_AS(centipede_polynomial(-1), DomainError);
    for (int n = 0; n <= 14; ++n) CHECK(centipede_polynomial(n) == centipede_polynomial_explicit(n));
    for (int n = 1; n <= 14; ++n) CHECK(centipede_polynomial(n) == independence_polynomial(corona(path_graph(n))));
    CHECK(path_polynomial(3) == IntPolynomial{1, 3, 1});
    CHECK(path_polynomial(4) == IntPolynomial{1, 4, 3});
    for (int n = 1; n <= 20; ++n) CHECK(path_polynomial(n) == oracle::independence_polynomial(path_graph(n)));
    const std::vector<std::vector<int>> shapes{{1}, {3}, {2, 2}, {1, 2, 3}, {4, 4, 4}, {1, 1, 1, 1, 1}};
    for (const auto& parts : shapes)
      CHECK(complete_multipartite_polynomial(parts) ==
            oracle::independence_polynomial(complete_multipartite_graph(parts)));
    const std::vector<int> equal{3, 3, 3, 3};
    CHECK(complete_multipartite_polynomial(equal) ==
          IntPolynomial::constant(4) * IntPolynomial::one_plus_x_pow(3) - IntPolynomial::constant(3));
  }

  TEST_CASE("monotonicity of corona coefficients") {
    CHECK(coefficient_monotonicity_check(IntPolynomial{1, 4, 3}, 2));
    CHECK(coefficient_monotonicity_check(IntPolynomial{1}, 0));
    CHECK_FALSE(coefficient_monotonicity_check(IntPolynomial{1, 4, 3, 1}, 3));
    for (int n = 1; n <= 6; ++n)
      for (const auto& g : enumerate_graphs(n))
        CHECK(coefficient_monotonicity_check(independence_polynomial(corona(g)), n));
  }

  TEST_CASE("well-covered coefficient inequalities") {
    CHECK_FALSE(coefficient_ratio_check(independence_polynomial(path_graph(3))));  // C(1,1) 3 > C(2,1) 1
    std::mt19937_64 rng(53);
    int well_covered = 0;
    for (int t = 0; t < 3000 && well_covered < 200; ++t) {
      const Graph g = oracle::random_graph(2 + t % 10, 0.55, rng);
      if (!oracle::well_covered(g)) continue;
      ++well_covered;
      const IntPolynomial s = independence_polynomial(g);
      CHECK(coefficient_ratio_check(s));
      CHECK(coefficient_growth_check(s));
      CHECK(oracle::clique_degree_identity(g));
    }
    CHECK(well_covered >= 100);
  }

  TEST_CASE("divisibility") {
    const auto k2 = divisibility_check(complete_graph(2));
    CHECK(k2.count == 8);
    CHECK(k2.power == 1);
    CHECK(k2.divides);
    const auto p3 = divisibility_check(star_graph(2));
    CHECK(p3.count == 22);
    CHECK(p3.power == 1);
    CHECK(p3.divides);
    CHECK_THROWS_AS(divisibility_check(Graph(3)), DomainError);
    for (int n = 2; n <= 7; ++n)
      for (const auto& g : enumerate_graphs(n))
        if (g.size() > 0) CHECK(divisibility_check(g).divides);
  }
}
