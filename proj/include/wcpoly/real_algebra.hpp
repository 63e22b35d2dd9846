#pragma once

#include <vector>

#include "wcpoly/polynomial.hpp"

namespace wcpoly {

/// gcd of the coefficients, always nonnegative.
BigInt content(const IntPolynomial& p);

/// p / content(p), with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// lc(b)^(deg a - deg b + 1) a mod b, computed over the integers.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over Q, required to have integer coefficients.
/// Throws DomainError if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquareFreeFactor {
  IntPolynomial factor;  // primitive, square-free, positive leading coefficient
  int multiplicity = 0;
};

/// Yun's decomposition p = c * prod f_i^i. Factors of degree zero are
/// dropped; sum of multiplicity * degree equals degree(p).
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

/// Sturm chain of a square-free polynomial, each remainder reduced to its
/// primitive part with the sign the chain requires.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& square_free);

  /// Distinct real roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int count_all() const;
  /// Roots in (-inf, x] and in (x, +inf).
  int count_at_most(const Rational& x) const;
  int count_above(const Rational& x) const;

  const IntPolynomial& base() const { return chain_.front(); }

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<IntPolynomial> chain_;
};

/// 1 + max |a_i / a_n|; every root has modulus strictly below it.
Rational cauchy_bound(const IntPolynomial& p);

int sign_at(const IntPolynomial& p, const Rational& x);

}  // namespace wcpoly
