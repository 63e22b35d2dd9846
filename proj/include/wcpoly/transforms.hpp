#pragma once

#include <optional>
#include <string>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"
#include "wcpoly/polynomial.hpp"

namespace wcpoly {

/// Exact binomial coefficient; zero when k < 0 or k > n. Rows up to 64 come
/// from a Pascal triangle built once.
const BigInt& binomial(int n, int k);

/// Skeleton coefficients s_0..s_alpha together with the skeleton order n.
struct CoronaTransformInput {
  IntPolynomial skeleton;
  int order = 0;

  /// s_0 = 1, all s_k >= 0, degree(s) <= n. Throws DomainError otherwise.
  void validate() const;
};

/// t_k = sum_j s_j C(n-j, n-k) for k = 0..n.
IntPolynomial corona_coefficients(const CoronaTransformInput& input);

/// sum_k s_k x^k (1+x)^(n-k), built by polynomial multiplication only.
IntPolynomial corona_polynomial_identity(const IntPolynomial& skeleton, int order);

enum class InverseStatus {
  Ok,
  NegativeCoefficient,  // some reconstructed s_k < 0
  NotCoronaImage,       // the forward transform does not reproduce t
};

struct InverseResult {
  InverseStatus status = InverseStatus::Ok;
  IntPolynomial skeleton;  // s_0..s_alpha as reconstructed
  int first_negative = -1; // index of the first negative s_k, if any

  bool ok() const noexcept { return status == InverseStatus::Ok; }
};

/// s_k = sum_j (-1)^(k+j) t_j C(n-j, n-k) for k = 0..alpha. Throws
/// DomainError unless degree(t) = n and 0 <= alpha <= n.
InverseResult inverse_corona_coefficients(const IntPolynomial& t, int order, int alpha);

std::string_view to_string(InverseStatus status);

/// Checks x^n I(G*;1/x) = (1+x)^n I(G;1/(1+x)) at x and
/// I(G*;-2) = (-1)^n I(G;2), both exactly. Throws DomainError for x in {-1, 0}.
bool functional_identity_check(const Graph& g, const Rational& x, const Limits& limits = {});

/// I(S_n) = (1+x) {1 + sum_k [C(n,k) 2^k + C(n-1,k-1)] x^k}, n >= 2.
IntPolynomial spider_polynomial(int n);

/// I(W_n) by I(W_n) = (1+x)(I(W_{n-1}) + x I(W_{n-2})), I(W_0) = 1, I(W_1) = 1 + 2x.
IntPolynomial centipede_polynomial(int n);

/// t_k = sum_j C(n-j, n-k) C(n+1-j, j); second route to I(W_n).
IntPolynomial centipede_polynomial_explicit(int n);

/// I(P_n) with coefficients C(n+1-j, j), n >= 1.
IntPolynomial path_polynomial(int n);

/// I(K_n*) = (1+x)^(n-1) (1 + (n+1) x), n >= 1.
IntPolynomial complete_corona_polynomial(int n);

/// I(K_{n_1,...,n_p}) = 1 + sum_i ((1+x)^{n_i} - 1). With p equal parts of
/// size a this is p (1+x)^a - (p-1).
IntPolynomial complete_multipartite_polynomial(std::span<const int> parts);

/// t_0 <= t_1 <= ... <= t_ceil(n/2).
bool coefficient_monotonicity_check(const IntPolynomial& t, int order);

/// C(alpha-i, j-i) s_i <= C(j, i) s_j for 1 <= i <= j <= alpha. Holds for
/// well-covered graphs.
bool coefficient_ratio_check(const IntPolynomial& s);

/// s_{k-1} <= s_k for 1 <= k <= (alpha-1)/2. Holds for well-covered graphs.
bool coefficient_growth_check(const IntPolynomial& s);

struct DivisibilityResult {
  BigInt count;     // I(G*;1)
  int power = 0;    // n - alpha(G)
  bool divides = false;
};

/// Stable-set count of G* against 2^(n - alpha(G)). Requires an edge.
DivisibilityResult divisibility_check(const Graph& g, const Limits& limits = {});

}  // namespace wcpoly
