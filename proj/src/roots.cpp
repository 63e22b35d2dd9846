#include "wcpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"
#include "wcpoly/real_algebra.hpp"

namespace wcpoly {

// ---- the root -1 -------------------------------------------------------

namespace {

// p = (1 + x) q + r; returns r and stores q.
BigInt divide_by_one_plus_x(const IntPolynomial& p, IntPolynomial& quotient) {
  const int d = p.degree();
  if (d < 1) {
    quotient = {};
    return d < 0 ? BigInt(0) : p[0];
  }
  std::vector<BigInt> q(static_cast<std::size_t>(d), 0);
  q[d - 1] = p[d];
  for (int k = d - 1; k >= 1; --k) q[k - 1] = p[k] - q[k];
  BigInt remainder = p[0] - q[0];
  quotient = IntPolynomial(std::move(q));
  return remainder;
}

}  // namespace

int multiplicity_of_minus_one(const IntPolynomial& p) {
  if (p.is_zero()) return 0;
  int m = 0;
  IntPolynomial cur = p;
  IntPolynomial q;
  while (cur.degree() >= 1 && divide_by_one_plus_x(cur, q) == 0) {
    cur = std::move(q);
    ++m;
  }
  return m;
}

IntPolynomial deflate_minus_one(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial cur = p;
  IntPolynomial q;
  while (cur.degree() >= 1 && divide_by_one_plus_x(cur, q) == 0) cur = std::move(q);
  return cur;
}

// ---- exact real roots --------------------------------------------------

double RealRootInterval::approximate() const {
  if (is_exact()) return lo.get_d();
  const Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

namespace {

struct FactorInterval {
  RealRootInterval interval;
  std::size_t factor = 0;
};

// Halves an interval holding one simple root of f with non-root endpoints.
void bisect_once(RealRootInterval& iv, const IntPolynomial& f) {
  if (iv.is_exact()) return;
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int s = sign_at(f, mid);
  if (s == 0) {
    iv.lo = mid;
    iv.hi = mid;
    return;
  }
  if (sign_at(f, iv.lo) * s < 0) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

// Open intervals (lo, hi), endpoints not roots of f, exactly one root each.
void isolate_factor(const IntPolynomial& f, const SturmSequence& sturm, Rational lo, Rational hi,
                    std::vector<RealRootInterval>& out) {
  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> work{{lo, hi}};
  while (!work.empty()) {
    Pending cur = work.back();
    work.pop_back();
    const int count = sturm.count(cur.lo, cur.hi);
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    if (sign_at(f, mid) != 0) {
      work.push_back({cur.lo, mid});
      work.push_back({mid, cur.hi});
      continue;
    }
    out.push_back({mid, mid, 1});
    // Step off the exact root far enough that no other root lies in between.
    Rational eps = (cur.hi - cur.lo) / 4;
    while (true) {
      const Rational left = mid - eps;
      const Rational right = mid + eps;
      if (sign_at(f, left) != 0 && sign_at(f, right) != 0 && sturm.count(left, mid) == 1 &&
          sturm.count(mid, right) == 0) {
        work.push_back({cur.lo, left});
        work.push_back({right, cur.hi});
        break;
      }
      eps /= 2;
    }
  }
}

bool overlapping(const RealRootInterval& a, const RealRootInterval& b) {
  // a.lo <= b.lo; open intervals with shared endpoints are disjoint.
  if (a.is_exact() && b.is_exact()) return a.lo == b.lo;
  if (a.is_exact()) return false;
  return a.hi > b.lo;
}

Rational width(const RealRootInterval& iv) { return iv.hi - iv.lo; }

}  // namespace

std::vector<RealRootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& max_width) {
  if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  const auto factors = square_free_decomposition(p);
  std::vector<FactorInterval> all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i].factor;
    const SturmSequence sturm(f);
    const Rational bound = cauchy_bound(f);
    std::vector<RealRootInterval> found;
    isolate_factor(f, sturm, -bound, bound, found);
    for (auto& iv : found) {
      iv.multiplicity = factors[i].multiplicity;
      while (!iv.is_exact() && width(iv) > max_width) bisect_once(iv, f);
      all.push_back({iv, i});
    }
  }
  auto by_lo = [](const FactorInterval& a, const FactorInterval& b) {
    if (a.interval.lo != b.interval.lo) return a.interval.lo < b.interval.lo;
    return a.interval.hi < b.interval.hi;
  };
  // Roots of distinct square-free factors differ, so refinement separates them.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(all.begin(), all.end(), by_lo);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      auto& a = all[i];
      auto& b = all[i + 1];
      if (!overlapping(a.interval, b.interval)) continue;
      bisect_once(a.interval, factors[a.factor].factor);
      bisect_once(b.interval, factors[b.factor].factor);
      changed = true;
    }
  }
  std::vector<RealRootInterval> out;
  out.reserve(all.size());
  for (auto& fi : all) out.push_back(fi.interval);
  return out;
}

int real_root_count(const IntPolynomial& p) {
  int total = 0;
  for (const auto& sf : square_free_decomposition(p)) total += sf.multiplicity * SturmSequence(sf.factor).count_all();
  return total;
}

bool all_roots_real(const IntPolynomial& p) { return real_root_count(p) == p.degree(); }

int distinct_real_roots_below(const IntPolynomial& p, const Rational& x) {
  int total = 0;
  for (const auto& sf : square_free_decomposition(p)) {
    const SturmSequence sturm(sf.factor);
    total += sturm.count_at_most(x) - (sign_at(sf.factor, x) == 0 ? 1 : 0);
  }
  return total;
}

int distinct_real_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  int total = 0;
  for (const auto& sf : square_free_decomposition(p)) {
    const SturmSequence sturm(sf.factor);
    total += sturm.count(lo, hi) + (sign_at(sf.factor, lo) == 0 ? 1 : 0);
  }
  return total;
}

// ---- numeric roots -----------------------------------------------------

namespace {

using Complex = std::complex<double>;

// Unique positive root of |a_d| r^d - sum_{i<d} |a_i| r^i; bounds every root.
double cauchy_radius(std::span<const double> a) {
  const int d = static_cast<int>(a.size()) - 1;
  auto q = [&](double r) {
    double acc = 0.0;
    for (int i = d; i >= 0; --i) acc = acc * r + (i == d ? std::abs(a[i]) : -std::abs(a[i]));
    return acc;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (q(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

void horner(std::span<const double> a, Complex z, Complex& value, Complex& deriv, double& magnitude) {
  value = 0.0;
  deriv = 0.0;
  magnitude = 0.0;
  const double r = std::abs(z);
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    deriv = deriv * z + value;
    value = value * z + a[i];
    magnitude = magnitude * r + std::abs(a[i]);
  }
}

std::string describe(std::span<const Complex> z) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& v : z) out << "(" << v.real() << "," << v.imag() << ") ";
  return out.str();
}

double relative_residual(std::span<const double> a, Complex z) {
  Complex value, deriv;
  double magnitude = 0.0;
  horner(a, z, value, deriv, magnitude);
  return magnitude > 0.0 ? std::abs(value) / magnitude : 0.0;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs, double tol, int max_iterations) {
  if (tol <= 0.0) throw DomainError("tolerance must be positive");
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  std::size_t last = coeffs.size();
  while (last > first && coeffs[last - 1] == 0.0) --last;
  if (last <= first + 1) {
    if (first == coeffs.size()) throw DomainError("aberth_roots: zero polynomial");
    return std::vector<Complex>(first, Complex(0.0));
  }
  const std::vector<double> a(coeffs.begin() + static_cast<std::ptrdiff_t>(first),
                              coeffs.begin() + static_cast<std::ptrdiff_t>(last));
  const int d = static_cast<int>(a.size()) - 1;

  const double radius = cauchy_radius(a);
  constexpr double kAngleOffset = 0.5 * std::numbers::sqrt2;  // breaks the conjugate symmetry
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / d + kAngleOffset);

  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * (d + 1);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < d; ++k) {
      Complex value, deriv;
      double magnitude = 0.0;
      horner(a, z[k], value, deriv, magnitude);
      if (std::abs(value) <= noise * magnitude) continue;  // at the rounding floor
      const Complex ratio = value / deriv;
      Complex repulsion = 0.0;
      for (int j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag())) {
        throw ConvergenceError("aberth_roots: iteration diverged; best iterate " + describe(z));
      }
      if (std::abs(step) > tol * std::max(1.0, std::abs(z[k]))) converged = false;
    }
    if (converged) {
      std::vector<Complex> out(first, Complex(0.0));
      out.insert(out.end(), z.begin(), z.end());
      return out;
    }
  }
  throw ConvergenceError("aberth_roots: no convergence after " + std::to_string(max_iterations) +
                         " iterations; best iterate " + describe(z));
}

std::vector<NumericRoot> numeric_roots(const IntPolynomial& p, double tol, int max_iterations) {
  if (p.is_zero()) throw DomainError("numeric_roots: zero polynomial");
  std::vector<NumericRoot> out;
  for (const auto& sf : square_free_decomposition(p)) {
    const IntPolynomial& f = sf.factor;
    std::vector<double> a;
    for (const auto& c : f.coefficients()) a.push_back(c.get_d());

    std::vector<NumericRoot> found;
    if (f.degree() == 1) {
      const Rational r(-f[0], f[1]);
      found.push_back({Complex(r.get_d(), 0.0), sf.multiplicity, true, 0.0});
    } else {
      auto z = aberth_roots(a, tol, max_iterations);
      const int real_count = SturmSequence(f).count_all();
      std::sort(z.begin(), z.end(), [](Complex x, Complex y) { return std::abs(x.imag()) < std::abs(y.imag()); });
      // The real_count roots nearest the axis are the real ones; polish them on the real line.
      for (int i = 0; i < real_count; ++i) {
        double x = z[i].real();
        for (int it = 0; it < 3; ++it) {
          Complex value, deriv;
          double magnitude = 0.0;
          horner(a, Complex(x, 0.0), value, deriv, magnitude);
          if (deriv.real() == 0.0) break;
          x -= value.real() / deriv.real();
        }
        found.push_back({Complex(x, 0.0), sf.multiplicity, true, 0.0});
      }
      std::vector<Complex> upper, lower;
      for (std::size_t i = static_cast<std::size_t>(real_count); i < z.size(); ++i)
        (z[i].imag() >= 0.0 ? upper : lower).push_back(z[i]);
      if (upper.size() == lower.size()) {
        // Pair each upper root with the nearest conjugate of a lower one.
        std::vector<char> used(lower.size(), 0);
        for (const auto& u : upper) {
          std::size_t best = 0;
          double best_dist = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(u - std::conj(lower[j]));
            if (dist < best_dist) {
              best_dist = dist;
              best = j;
            }
          }
          used[best] = 1;
          const Complex mean = 0.5 * (u + std::conj(lower[best]));
          const Complex top(mean.real(), std::abs(mean.imag()));
          found.push_back({top, sf.multiplicity, false, 0.0});
          found.push_back({std::conj(top), sf.multiplicity, false, 0.0});
        }
      } else {
        for (std::size_t i = static_cast<std::size_t>(real_count); i < z.size(); ++i)
          found.push_back({z[i], sf.multiplicity, false, 0.0});
      }
    }
    for (auto& r : found) r.residual = relative_residual(a, r.value);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& x, const NumericRoot& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

std::vector<std::complex<double>> expand_roots(std::span<const NumericRoot> roots) {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

// ---- reports -----------------------------------------------------------

const BoundCheck* RootReport::bound(std::string_view name) const {
  for (const auto& b : bounds)
    if (b.name == name) return &b;
  return nullptr;
}

bool RootReport::all_pass() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return !b.applicable || b.pass; });
}

RootReport analyze_roots(const IntPolynomial& p, double tol) {
  RootReport report;
  report.polynomial = p;
  report.minus_one_multiplicity = multiplicity_of_minus_one(p);
  report.real_roots = isolate_real_roots(p);
  for (auto& r : numeric_roots(p, tol))
    if (!r.real) report.complex_roots.push_back(r);
  return report;
}

namespace {

bool is_cycle_graph(const Graph& g) {
  if (!is_connected(g) || g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

Rational frac(long num, long den) { return make_rational(num, den); }

}  // namespace

RootReport verify_bounds(const Graph& g, double tol, const Limits& limits) {
  const int n = g.order();
  if (n < 2) throw DomainError("verify_bounds requires a graph on at least 2 vertices");
  const IntPolynomial p = independence_polynomial(g, limits);
  RootReport report = analyze_roots(p, kDefaultRootTolerance);
  const int a = p.degree();
  const bool complete = is_complete(g);
  const bool well_covered = n <= limits.well_covered_max && is_well_covered(g, limits);

  const auto all = numeric_roots(p, kDefaultRootTolerance);
  double min_modulus = std::numeric_limits<double>::infinity();
  for (const auto& r : all) min_modulus = std::min(min_modulus, std::abs(r.value));
  std::optional<double> xi_max;
  if (!report.real_roots.empty()) xi_max = report.real_roots.back().approximate();

  // (a) annulus, well-covered graphs.
  {
    BoundCheck annulus{"annulus", well_covered, false, 0.0, ""};
    BoundCheck boundary{"annulus_boundary", well_covered, false, 0.0, ""};
    if (well_covered) {
      const Rational inner = frac(-1, n);
      const Rational outer = Rational(-a);
      const bool real_inside = distinct_real_roots_below(p, outer) == 0 &&
                               distinct_real_roots_in(p, inner, Rational(0)) == (sign_at(p, inner) == 0 ? 1 : 0);
      double margin = std::numeric_limits<double>::infinity();
      bool complex_inside = true;
      bool complex_on_boundary = false;
      for (const auto& r : all) {
        const double m = std::abs(r.value);
        margin = std::min({margin, m - 1.0 / n, static_cast<double>(a) - m});
        if (r.real) continue;
        if (m < 1.0 / n - tol || m > a + tol) complex_inside = false;
        if (std::abs(m - 1.0 / n) <= tol || std::abs(m - a) <= tol) complex_on_boundary = true;
      }
      annulus.pass = real_inside && complex_inside;
      annulus.margin = margin;
      const bool on_boundary = sign_at(p, inner) == 0 || sign_at(p, outer) == 0 || complex_on_boundary;
      boundary.pass = on_boundary == complete;
      boundary.margin = margin;
      boundary.note = on_boundary ? (complete ? "complete graph: root on the boundary"
                                              : "non-complete graph with a root on the boundary")
                                  : "no root on the boundary";
    } else {
      annulus.note = boundary.note = n > limits.well_covered_max ? "N/A: above the well-covered cap" : "N/A: not well-covered";
    }
    report.bounds.push_back(annulus);
    report.bounds.push_back(boundary);
  }

  // (b) xi_max interval.
  const Rational upper = frac(-1, 2 * n - 1);
  {
    BoundCheck check{"xi_max_interval", true, false, 0.0, ""};
    const int omega = clique_number(g, limits);
    Rational lower = std::max(Rational(-a, n), Rational(-1, omega));
    lower.canonicalize();
    if (!xi_max) {
      check.note = "no real root";
      check.margin = -std::numeric_limits<double>::infinity();
    } else {
      const bool above_clear = distinct_real_roots_in(p, upper, Rational(0)) == 0;
      const bool below_hit = distinct_real_roots_in(p, lower, upper) >= 1;
      check.pass = above_clear && below_hit;
      check.margin = std::min(*xi_max - lower.get_d(), upper.get_d() - *xi_max);
      check.note = "lower " + lower.get_str() + ", upper " + upper.get_str();
    }
    report.bounds.push_back(check);
  }

  // (c) every root beyond 1/(2n-1) in modulus.
  {
    BoundCheck check{"modulus_lower", true, false, 0.0, ""};
    const double r0 = 1.0 / (2 * n - 1);
    const bool real_ok = distinct_real_roots_in(p, upper, Rational(0)) == 0;
    check.margin = min_modulus - r0;
    check.pass = real_ok && check.margin > tol;
    check.note = "numeric for non-real roots";
    report.bounds.push_back(check);
  }

  // (d) real roots in [-1, -1/(2 alpha)).
  {
    const auto g_girth = girth(g);
    const bool excluded = is_complete(g) && n <= 2;  // K_1, K_2
    const bool c7 = n == 7 && is_cycle_graph(g);
    const bool applicable = well_covered && is_connected(g) && (!g_girth || *g_girth >= 6) && !excluded && !c7;
    BoundCheck check{"real_roots_unit_band", applicable, false, 0.0, ""};
    if (applicable) {
      const Rational right = frac(-1, 2 * a);
      const bool left_ok = distinct_real_roots_below(p, Rational(-1)) == 0;
      const bool right_ok = distinct_real_roots_in(p, right, Rational(0)) == 0;
      check.pass = left_ok && right_ok;
      double margin = std::numeric_limits<double>::infinity();
      for (const auto& iv : report.real_roots) {
        const double x = iv.approximate();
        margin = std::min({margin, x + 1.0, right.get_d() - x});
      }
      check.margin = margin;
    } else {
      check.note = "N/A: requires connected well-covered girth >= 6 outside C_7, K_1, K_2";
    }
    report.bounds.push_back(check);
  }

  // (e) the root of least modulus is real and unique.
  {
    BoundCheck check{"smallest_modulus_real", true, false, 0.0, ""};
    if (!xi_max) {
      check.note = "no real root";
    } else {
      const double target = std::abs(*xi_max);
      double gap = std::numeric_limits<double>::infinity();
      bool found_self = false;
      for (const auto& r : all) {
        if (r.real && !found_self && std::abs(r.value.real() - *xi_max) <= tol * std::max(1.0, target)) {
          found_self = true;
          continue;
        }
        gap = std::min(gap, std::abs(r.value) - target);
      }
      check.margin = gap;
      check.pass = found_self && gap > tol;
    }
    report.bounds.push_back(check);
  }
  return report;
}

nlohmann::json to_json(const RootReport& report) {
  nlohmann::json j;
  j["polynomial"] = to_json(report.polynomial);
  j["degree"] = report.polynomial.degree();
  j["minus_one_multiplicity"] = report.minus_one_multiplicity;
  auto reals = nlohmann::json::array();
  for (const auto& iv : report.real_roots) {
    reals.push_back({{"lo", iv.lo.get_str()},
                     {"hi", iv.hi.get_str()},
                     {"exact", iv.is_exact()},
                     {"multiplicity", iv.multiplicity},
                     {"approx", iv.approximate()}});
  }
  j["real_roots"] = reals;
  auto complexes = nlohmann::json::array();
  for (const auto& r : report.complex_roots) {
    complexes.push_back(
        {{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}, {"residual", r.residual}});
  }
  j["complex_roots"] = complexes;
  j["complex_roots_certified"] = false;
  auto bounds = nlohmann::json::array();
  for (const auto& b : report.bounds) {
    bounds.push_back(
        {{"name", b.name}, {"applicable", b.applicable}, {"pass", b.pass}, {"margin", b.margin}, {"note", b.note}});
  }
  j["bounds"] = bounds;
  return j;
}

std::string to_text(const RootReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << "I(x) = " << to_text(report.polynomial) << "\n";
  out << "degree " << report.polynomial.degree() << ", m(-1) = " << report.minus_one_multiplicity << "\n";
  out << "real roots:\n";
  for (const auto& iv : report.real_roots) {
    out << "  ";
    if (iv.is_exact()) {
      out << iv.lo.get_str();
    } else {
      out << "(" << iv.lo.get_str() << ", " << iv.hi.get_str() << ")";
    }
    out << "  ~ " << iv.approximate() << "  multiplicity " << iv.multiplicity << "\n";
  }
  out << "non-real roots (numeric):\n";
  for (const auto& r : report.complex_roots) {
    out << "  " << r.value.real() << (r.value.imag() < 0 ? " - " : " + ") << std::abs(r.value.imag())
        << "i  multiplicity " << r.multiplicity << "\n";
  }
  if (!report.bounds.empty()) {
    out << "bounds:\n";
    for (const auto& b : report.bounds) {
      out << "  " << b.name << ": " << (!b.applicable ? "N/A" : b.pass ? "pass" : "FAIL");
      if (b.applicable) out << "  margin " << b.margin;
      if (!b.note.empty()) out << "  (" << b.note << ")";
      out << "\n";
    }
  }
  return out.str();
}

// ---- corona root correspondences ---------------------------------------

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Rational roots with multiplicity, for p with p(0) = +-1.
std::vector<std::pair<Rational, int>> unit_rational_roots(const IntPolynomial& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() < 1 || abs(p[0]) != 1) return out;
  for (const auto& d : positive_divisors(p.leading())) {
    for (int sign : {-1, 1}) {
      Rational r(BigInt(sign), d);
      r.canonicalize();
      if (evaluate_exact(p, r) != 0) continue;
      // Multiplicity by repeated division by (d x - sign).
      const IntPolynomial linear(std::vector<BigInt>{BigInt(-sign), d});
      int m = 0;
      IntPolynomial cur = p;
      while (true) {
        try {
          cur = divide_exact(cur, linear);
          ++m;
        } catch (const DomainError&) {
          break;
        }
      }
      out.emplace_back(r, m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> structure(const IntPolynomial& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& sf : square_free_decomposition(p)) out.emplace_back(sf.multiplicity, sf.factor.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> real_structure(const IntPolynomial& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& sf : square_free_decomposition(p))
    out.emplace_back(sf.multiplicity, SturmSequence(sf.factor).count_all());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BijectionReport root_bijection_check(const Graph& g, double tol, const Limits& limits) {
  if (g.order() > 10) throw DomainError("root_bijection_check supports graphs on at most 10 vertices");
  BijectionReport report;
  const int n = g.order();
  const IntPolynomial base = independence_polynomial(g, limits);
  const IntPolynomial lifted = independence_polynomial(corona(g), limits);
  const IntPolynomial deflated = deflate_minus_one(lifted);
  report.alpha = base.degree();
  report.corona_roots = deflated.degree();
  report.minus_one_multiplicity = multiplicity_of_minus_one(lifted);
  auto fail = [&](std::string msg) {
    report.pass = false;
    report.failures.push_back(std::move(msg));
  };

  if (report.corona_roots != report.alpha) {
    fail("degree mismatch: " + std::to_string(report.alpha) + " roots vs " + std::to_string(report.corona_roots));
  }
  if (report.minus_one_multiplicity != n - report.alpha) {
    fail("m(-1) = " + std::to_string(report.minus_one_multiplicity) + " but n - alpha = " +
         std::to_string(n - report.alpha));
  }
  // Exact form of the correspondence: deflated(x) = (1+x)^alpha I(G; x/(1+x)).
  IntPolynomial pulled;
  for (int k = 0; k <= base.degree(); ++k)
    pulled += IntPolynomial::monomial(k, base[k]) * IntPolynomial::one_plus_x_pow(base.degree() - k);
  if (pulled != deflated) fail("deflated corona polynomial differs from (1+x)^alpha I(G; x/(1+x))");
  if (structure(base) != structure(deflated)) fail("square-free multiplicity structure differs");
  if (real_structure(base) != real_structure(deflated)) fail("real root counts per multiplicity differ");

  auto rational_base = unit_rational_roots(base);
  for (auto& [r, m] : rational_base) {
    r = r / (1 - r);
    r.canonicalize();
  }
  std::sort(rational_base.begin(), rational_base.end());
  if (rational_base != unit_rational_roots(deflated)) fail("rational roots do not correspond under x/(1-x)");

  if (report.alpha > 0 && report.corona_roots == report.alpha) {
    const auto a_roots = expand_roots(numeric_roots(base));
    auto b_roots = expand_roots(numeric_roots(deflated));
    std::vector<char> used(b_roots.size(), 0);
    for (const auto& a : a_roots) {
      const std::complex<double> image = a / (1.0 - a);
      std::size_t best = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < b_roots.size(); ++j) {
        if (used[j]) continue;
        const double dist = std::abs(image - b_roots[j]) / std::max(1.0, std::abs(b_roots[j]));
        if (dist < best_dist) {
          best_dist = dist;
          best = j;
        }
      }
      used[best] = 1;
      report.max_distance = std::max(report.max_distance, best_dist);
    }
    if (report.max_distance > tol) {
      std::ostringstream msg;
      msg << "numeric root images differ by " << report.max_distance;
      fail(msg.str());
    }
  }
  return report;
}

IteratedCorona build_iterated_corona(const Graph& seed, int k) {
  if (!is_tree(seed) || seed.order() < 2) throw DomainError("the seed must be a tree other than K_1");
  if (k < 1) throw DomainError("k must be at least 1");
  if (k >= 7 || (static_cast<long>(seed.order()) << k) > 64) {
    throw ResourceError("H_k would exceed 64 vertices");
  }
  IteratedCorona result{seed, false};
  for (int i = 0; i < k; ++i) result.graph = corona(result.graph);
  const IntPolynomial p = independence_polynomial_tree(result.graph);
  result.verified = evaluate_exact(p, frac(-1, k)) == 0;
  return result;
}

bool negative_tail_sign_check(const Graph& g, std::span<const Rational> samples, const Limits& limits) {
  if (g.size() == 0) throw DomainError("negative_tail_sign_check requires a graph with at least one edge");
  for (const auto& x : samples)
    if (x >= -1) throw DomainError("samples must lie below -1");
  const IntPolynomial lifted = independence_polynomial(corona(g), limits);
  const int expected = g.order() % 2 == 0 ? 1 : -1;
  for (const auto& x : samples)
    if (sign_at(lifted, x) != expected) return false;
  return true;
}

bool has_real_root_below_minus_one(const IntPolynomial& p) {
  return distinct_real_roots_below(p, Rational(-1)) > 0;
}

}  // namespace wcpoly
