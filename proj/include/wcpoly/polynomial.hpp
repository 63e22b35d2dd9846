#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wcpoly {

using BigInt = mpz_class;

/// Exact fraction; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. Trailing zeros are never stored, so the zero polynomial has
/// an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int degree, const BigInt& c = 1);
  /// (1 + x)^m by repeated multiplication.
  static IntPolynomial one_plus_x_pow(int m);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  const BigInt& operator[](int k) const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  const BigInt& leading() const;

  IntPolynomial shifted(int k) const;  // x^k * p
  IntPolynomial derivative() const;
  BigInt sum_of_coefficients() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_multiply(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_shift(const IntPolynomial& p, int k);
IntPolynomial poly_pow(const IntPolynomial& p, int e);

/// Exact value by Horner's scheme.
Rational evaluate_exact(const IntPolynomial& p, const Rational& x);
double evaluate_double(const IntPolynomial& p, double x);

/// "1 + 3x + x^2"; the zero polynomial prints as "0".
std::string to_text(const IntPolynomial& p);

/// JSON array of decimal strings, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

/// Accepts a JSON array (strings or integers), a comma/space separated list
/// of integers lowest degree first, or text such as "1 + 3x + x^2".
IntPolynomial parse_polynomial(std::string_view text);

/// Exact decimal key, usable for hashing polynomials.
std::string polynomial_key(const IntPolynomial& p);

std::string to_string(const Rational& q);

}  // namespace wcpoly
