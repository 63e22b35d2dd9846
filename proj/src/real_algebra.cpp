#include "wcpoly/real_algebra.hpp"

#include <utility>

#include "wcpoly/errors.hpp"

namespace wcpoly {

namespace {

// Divides by the (positive) content without touching the sign.
IntPolynomial remove_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  if (c == 1) return p;
  std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& a : out) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

int sign_of(const BigInt& v) { return sgn(v); }

}  // namespace

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  IntPolynomial q = remove_content(p);
  if (!q.is_zero() && q.leading() < 0) q = -q;
  return q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt lb = b.leading();
  int e = a.degree() - b.degree() + 1;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const IntPolynomial s = IntPolynomial::monomial(r.degree() - b.degree(), r.leading());
    r = r * lb - s * b;
    --e;
  }
  for (; e > 0; --e) r *= lb;
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("divide_exact: divisor does not divide");
  std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const BigInt& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw DomainError("divide_exact: non-integral quotient");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= b.degree(); ++i) rem[static_cast<std::size_t>(k + i)] -= q * b[i];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) throw DomainError("divide_exact: divisor does not divide");
  return IntPolynomial(std::move(quot));
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  const IntPolynomial a = primitive_part(p);
  const IntPolynomial da = a.derivative();
  const IntPolynomial c = polynomial_gcd(a, da);
  IntPolynomial w = divide_exact(a, c);
  IntPolynomial y = divide_exact(da, c);
  IntPolynomial z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    const IntPolynomial g = polynomial_gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    z = y - w.derivative();
  }
  return out;
}

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(remove_content(square_free));
  if (square_free.degree() == 0) return;
  chain_.push_back(remove_content(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    // prem scales by lc(b)^(da - db + 1); undo a negative factor.
    if (b.leading() < 0 && (a.degree() - b.degree() + 1) % 2 != 0) r = -r;
    if (r.is_zero()) break;  // not square-free; the chain ends at the gcd
    chain_.push_back(remove_content(-r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sgn(evaluate_exact(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_of(p.leading());
    if (!positive && p.degree() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int SturmSequence::count_at_most(const Rational& x) const {
  return variations_at_infinity(false) - variations_at(x);
}

int SturmSequence::count_above(const Rational& x) const {
  return variations_at(x) - variations_at_infinity(true);
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  BigInt max_abs = 0;
  for (int k = 0; k < p.degree(); ++k) {
    const BigInt m = abs(p[k]);
    if (m > max_abs) max_abs = m;
  }
  Rational bound(max_abs, abs(p.leading()));
  bound.canonicalize();
  return bound + 1;
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(evaluate_exact(p, x)); }

}  // namespace wcpoly
