#include "wcpoly/transforms.hpp"

#include <algorithm>
#include <array>

#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"

namespace wcpoly {

namespace {

constexpr int kPascalRows = 64;

const std::vector<std::vector<BigInt>>& pascal() {
  static const std::vector<std::vector<BigInt>> rows = [] {
    std::vector<std::vector<BigInt>> r(kPascalRows + 1);
    for (int n = 0; n <= kPascalRows; ++n) {
      r[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) r[n][k] = r[n - 1][k - 1] + r[n - 1][k];
    }
    return r;
  }();
  return rows;
}

const BigInt kZeroBinomial = 0;

}  // namespace

const BigInt& binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return kZeroBinomial;
  if (n <= kPascalRows) return pascal()[n][k];
  thread_local BigInt scratch;
  mpz_bin_uiui(scratch.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return scratch;
}

void CoronaTransformInput::validate() const {
  if (order < 0) throw DomainError("skeleton order must be nonnegative");
  if (skeleton.is_zero() || skeleton[0] != 1) throw DomainError("skeleton polynomial must have s_0 = 1");
  if (skeleton.degree() > order) {
    throw DomainError("skeleton degree " + std::to_string(skeleton.degree()) + " exceeds its order " +
                      std::to_string(order));
  }
  for (const auto& c : skeleton.coefficients())
    if (c < 0) throw DomainError("skeleton coefficients must be nonnegative");
}

IntPolynomial corona_coefficients(const CoronaTransformInput& input) {
  input.validate();
  const int n = input.order;
  const auto& s = input.skeleton;
  std::vector<BigInt> t(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= std::min(k, s.degree()); ++j) t[k] += s[j] * binomial(n - j, n - k);
  }
  return IntPolynomial(std::move(t));
}

IntPolynomial corona_polynomial_identity(const IntPolynomial& skeleton, int order) {
  CoronaTransformInput{skeleton, order}.validate();
  IntPolynomial sum;
  const IntPolynomial one_plus_x{1, 1};
  // Horner-like accumulation in powers of (1+x): build from k = alpha down.
  IntPolynomial power_of_one_plus_x = IntPolynomial::constant(1);
  for (int i = 0; i < order - skeleton.degree(); ++i) power_of_one_plus_x *= one_plus_x;
  for (int k = skeleton.degree(); k >= 0; --k) {
    if (skeleton[k] != 0) sum += IntPolynomial::monomial(k, skeleton[k]) * power_of_one_plus_x;
    power_of_one_plus_x *= one_plus_x;
  }
  return sum;
}

InverseResult inverse_corona_coefficients(const IntPolynomial& t, int order, int alpha) {
  if (t.degree() != order) {
    throw DomainError("corona polynomial degree " + std::to_string(t.degree()) + " differs from the order " +
                      std::to_string(order));
  }
  if (alpha < 0 || alpha > order) throw DomainError("alpha must satisfy 0 <= alpha <= n");

  InverseResult result;
  std::vector<BigInt> s(static_cast<std::size_t>(alpha) + 1, 0);
  for (int k = 0; k <= alpha; ++k) {
    for (int j = 0; j <= k; ++j) {
      const BigInt term = t[j] * binomial(order - j, order - k);
      if ((k + j) % 2 == 0) {
        s[k] += term;
      } else {
        s[k] -= term;
      }
    }
    if (s[k] < 0 && result.first_negative < 0) result.first_negative = k;
  }
  result.skeleton = IntPolynomial(std::move(s));
  if (result.first_negative >= 0) {
    result.status = InverseStatus::NegativeCoefficient;
    return result;
  }
  if (result.skeleton.is_zero() || result.skeleton[0] != 1 ||
      corona_coefficients({result.skeleton, order}) != t) {
    result.status = InverseStatus::NotCoronaImage;
  }
  return result;
}

std::string_view to_string(InverseStatus status) {
  switch (status) {
    case InverseStatus::Ok: return "ok";
    case InverseStatus::NegativeCoefficient: return "negative-coefficient";
    case InverseStatus::NotCoronaImage: return "not-corona-image";
  }
  return "unknown";
}

bool functional_identity_check(const Graph& g, const Rational& x, const Limits& limits) {
  if (x == 0 || x == -1) throw DomainError("functional identity is stated for x outside {-1, 0}");
  const int n = g.order();
  const IntPolynomial base = independence_polynomial(g, limits);
  const IntPolynomial lifted = independence_polynomial(corona(g), limits);

  Rational x_pow = 1;
  Rational one_plus_x_pow = 1;
  const Rational one_plus_x = x + 1;
  for (int i = 0; i < n; ++i) {
    x_pow *= x;
    one_plus_x_pow *= one_plus_x;
  }
  const Rational lhs = x_pow * evaluate_exact(lifted, Rational(1) / x);
  const Rational rhs = one_plus_x_pow * evaluate_exact(base, Rational(1) / one_plus_x);

  const Rational sign = n % 2 == 0 ? 1 : -1;
  const bool specialization = evaluate_exact(lifted, Rational(-2)) == sign * evaluate_exact(base, Rational(2));
  return lhs == rhs && specialization;
}

IntPolynomial spider_polynomial(int n) {
  if (n < 2) throw DomainError("spider_polynomial requires n >= 2");
  std::vector<BigInt> inner(static_cast<std::size_t>(n) + 1, 0);
  inner[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt two_pow = 1;
    two_pow <<= k;
    inner[k] = binomial(n, k) * two_pow + binomial(n - 1, k - 1);
  }
  return IntPolynomial{1, 1} * IntPolynomial(std::move(inner));
}

IntPolynomial centipede_polynomial(int n) {
  if (n < 0) throw DomainError("centipede_polynomial requires n >= 0");
  IntPolynomial prev = IntPolynomial::constant(1);  // W_0
  if (n == 0) return prev;
  IntPolynomial cur{1, 2};  // W_1
  const IntPolynomial one_plus_x{1, 1};
  for (int k = 2; k <= n; ++k) {
    IntPolynomial next = one_plus_x * (cur + prev.shifted(1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial centipede_polynomial_explicit(int n) {
  if (n < 0) throw DomainError("centipede_polynomial_explicit requires n >= 0");
  std::vector<BigInt> t(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) t[k] += binomial(n - j, n - k) * binomial(n + 1 - j, j);
  return IntPolynomial(std::move(t));
}

IntPolynomial path_polynomial(int n) {
  if (n < 1) throw DomainError("path_polynomial requires n >= 1");
  std::vector<BigInt> coeffs;
  for (int j = 0; j <= (n + 1) / 2; ++j) coeffs.push_back(binomial(n + 1 - j, j));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial complete_corona_polynomial(int n) {
  if (n < 1) throw DomainError("complete_corona_polynomial requires n >= 1");
  return poly_pow(IntPolynomial{1, 1}, n - 1) * IntPolynomial{1, n + 1};
}

IntPolynomial complete_multipartite_polynomial(std::span<const int> parts) {
  if (parts.empty()) throw DomainError("complete multipartite polynomial needs at least one part");
  IntPolynomial sum = IntPolynomial::constant(1);
  for (int size : parts) {
    if (size < 1) throw DomainError("part sizes must be positive");
    sum += poly_pow(IntPolynomial{1, 1}, size) - IntPolynomial::constant(1);
  }
  return sum;
}

bool coefficient_monotonicity_check(const IntPolynomial& t, int order) {
  const int j = (order + 1) / 2;
  for (int k = 1; k <= j; ++k)
    if (t[k - 1] > t[k]) return false;
  return true;
}

bool coefficient_ratio_check(const IntPolynomial& s) {
  const int a = s.degree();
  for (int i = 1; i <= a; ++i)
    for (int j = i; j <= a; ++j)
      if (binomial(a - i, j - i) * s[i] > binomial(j, i) * s[j]) return false;
  return true;
}

bool coefficient_growth_check(const IntPolynomial& s) {
  const int a = s.degree();
  for (int k = 1; 2 * k <= a - 1; ++k)
    if (s[k - 1] > s[k]) return false;
  return true;
}

DivisibilityResult divisibility_check(const Graph& g, const Limits& limits) {
  if (g.size() == 0) throw DomainError("divisibility_check requires a graph with at least one edge");
  DivisibilityResult r;
  r.count = independence_polynomial(corona(g), limits).sum_of_coefficients();
  r.power = g.order() - alpha(g, limits);
  r.divides = mpz_scan1(r.count.get_mpz_t(), 0) >= static_cast<mp_bitcnt_t>(r.power);
  return r;
}

}  // namespace wcpoly
