#include "wcpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wcpoly/errors.hpp"

namespace wcpoly {

namespace {
const BigInt kZero = 0;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& c) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::one_plus_x_pow(int m) {
  if (m < 0) throw DomainError("negative exponent");
  IntPolynomial result = constant(1);
  const IntPolynomial base{1, 1};
  for (int i = 0; i < m; ++i) result *= base;
  return result;
}

const BigInt& IntPolynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::sum_of_coefficients() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial poly_multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
IntPolynomial poly_shift(const IntPolynomial& p, int k) { return p.shifted(k); }

IntPolynomial poly_pow(const IntPolynomial& p, int e) {
  if (e < 0) throw DomainError("negative exponent");
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational evaluate_exact(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (int k = p.degree(); k >= 0; --k) {
    acc *= x;
    acc += Rational(p[k]);
  }
  acc.canonicalize();
  return acc;
}

double evaluate_double(const IntPolynomial& p, double x) {
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p[k].get_d();
  return acc;
}

std::string to_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p[k];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

nlohmann::json to_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

namespace {

BigInt parse_bigint(std::string_view s, std::size_t offset) {
  std::string text(s);
  if (text.empty()) throw ParseError("empty integer", offset);
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits", offset);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("invalid digit in integer", offset + i);
  }
  if (text[0] == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    if (item.is_string()) {
      coeffs.push_back(parse_bigint(item.get<std::string>(), i));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(std::to_string(item.get<long long>()), 10);
    } else {
      throw ParseError("polynomial coefficient must be an integer or decimal string", i);
    }
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

// "1 + 3x + x^2", "2x^3 - x", "-4".
IntPolynomial parse_polynomial_text(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial", 0);
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t term_start = i;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (term_start != 0) {
      throw ParseError("expected '+' or '-'", i);
    }
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt c = 1;
    bool has_digits = i > digits_start;
    if (has_digits) c = BigInt(s.substr(digits_start, i - digits_start), 10);
    if (i < s.size() && s[i] == '*') ++i;
    int power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::size_t p_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == p_start) throw ParseError("expected an exponent", i);
        power = std::stoi(s.substr(p_start, i - p_start));
      }
    } else if (!has_digits) {
      throw ParseError("expected a coefficient or x", i);
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1, 0);
    coeffs[static_cast<std::size_t>(power)] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return polynomial_from_json(j);
  }
  if (text.find('x') != std::string_view::npos) return parse_polynomial_text(text);

  std::vector<BigInt> coeffs;
  std::size_t i = first;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    coeffs.push_back(parse_bigint(text.substr(start, i - start), start));
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list", 0);
  return IntPolynomial(std::move(coeffs));
}

std::string polynomial_key(const IntPolynomial& p) {
  std::string key;
  for (const auto& c : p.coefficients()) {
    key += c.get_str();
    key += ',';
  }
  return key;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace wcpoly
