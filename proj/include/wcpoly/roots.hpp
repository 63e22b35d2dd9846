#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"
#include "wcpoly/polynomial.hpp"

namespace wcpoly {

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kDefaultMaxIterations = 1000;

// ---- the root -1 -------------------------------------------------------

/// Largest m with (1+x)^m dividing p; zero for the zero polynomial.
int multiplicity_of_minus_one(const IntPolynomial& p);

/// p / (1+x)^m with m = multiplicity_of_minus_one(p).
IntPolynomial deflate_minus_one(const IntPolynomial& p);

// ---- exact real roots --------------------------------------------------

/// Either lo < root < hi with neither endpoint a root, or lo == hi == root.
struct RealRootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  double approximate() const;
};

/// Square-free decomposition followed by Sturm bisection of each factor.
/// Intervals are pairwise disjoint, ascending, and no wider than max_width
/// (unless exact). Throws DomainError for the zero polynomial.
std::vector<RealRootInterval> isolate_real_roots(const IntPolynomial& p,
                                                 const Rational& max_width = Rational(1, 1 << 30));

/// Real roots counted with multiplicity.
int real_root_count(const IntPolynomial& p);

/// Every root real, certified with Sturm counts on the square-free factors.
bool all_roots_real(const IntPolynomial& p);

/// Number of distinct real roots strictly below x.
int distinct_real_roots_below(const IntPolynomial& p, const Rational& x);

/// Number of distinct real roots in the closed interval [lo, hi].
int distinct_real_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi);

// ---- numeric roots -----------------------------------------------------

/// Simultaneous Aberth iteration on double coefficients (lowest degree
/// first). Deterministic start on a Cauchy-radius circle. Throws
/// ConvergenceError after max_iterations.
std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs,
                                               double tol = kDefaultRootTolerance,
                                               int max_iterations = kDefaultMaxIterations);

struct NumericRoot {
  std::complex<double> value;
  int multiplicity = 1;   // taken from the exact square-free structure
  bool real = false;      // certified by the Sturm count of its factor
  double residual = 0.0;  // |f(z)| / sum |a_i| |z|^i on its square-free factor
};

/// Distinct roots with exact multiplicities. Each square-free factor is
/// solved separately; the number of real roots per factor comes from Sturm
/// and non-real roots are paired as conjugates.
std::vector<NumericRoot> numeric_roots(const IntPolynomial& p,
                                       double tol = kDefaultRootTolerance,
                                       int max_iterations = kDefaultMaxIterations);

/// Repeats each root multiplicity times.
std::vector<std::complex<double>> expand_roots(std::span<const NumericRoot> roots);

// ---- reports -----------------------------------------------------------

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool pass = false;
  double margin = 0.0;  // distance to the violated side; negative on failure
  std::string note;
};

struct RootReport {
  IntPolynomial polynomial;
  int minus_one_multiplicity = 0;
  std::vector<RealRootInterval> real_roots;
  std::vector<NumericRoot> complex_roots;  // non-real only
  std::vector<BoundCheck> bounds;

  const BoundCheck* bound(std::string_view name) const;
  /// Every applicable bound passed.
  bool all_pass() const;
};

/// Root structure of p without graph-specific bounds.
RootReport analyze_roots(const IntPolynomial& p, double tol = kDefaultRootTolerance);

/// Root structure of I(g;x) plus the named location bounds:
///   annulus                   1/n <= |z| <= alpha, well-covered g
///   annulus_boundary          a root on the annulus boundary iff g complete
///   xi_max_interval           max(-alpha/n, -1/omega) <= xi_max < -1/(2n-1)
///   modulus_lower             |z| > 1/(2n-1) for every root
///   real_roots_unit_band      real roots in [-1, -1/(2 alpha)) for connected
///                             well-covered g of girth >= 6 outside {C_7, K_1, K_2}
///   smallest_modulus_real     the root of least modulus is xi_max and unique
/// Inapplicable bounds carry applicable = false and pass = false.
RootReport verify_bounds(const Graph& g, double tol = 1e-9, const Limits& limits = {});

nlohmann::json to_json(const RootReport& report);
std::string to_text(const RootReport& report);

// ---- corona root correspondences ---------------------------------------

struct BijectionReport {
  bool pass = true;
  int alpha = 0;                   // roots of I(G) with multiplicity
  int corona_roots = 0;            // roots of I(G*) other than -1, with multiplicity
  int minus_one_multiplicity = 0;
  double max_distance = 0.0;       // worst |f(a) - b| after matching
  std::vector<std::string> failures;
};

/// Matches f(a) = a / (1 - a) over roots a of I(G) against the roots of
/// I(G*)/(1+x)^m as multisets within tol, and checks exactly that
/// multiplicities, real-root counts and rational roots correspond.
BijectionReport root_bijection_check(const Graph& g, double tol = 1e-9,
                                     const Limits& limits = {});

struct IteratedCorona {
  Graph graph;
  bool verified = false;  // I(H_k; -1/k) == 0 exactly
};

/// H_1 = seed*, H_j = H_{j-1}*. Requires a tree seed other than K_1, k >= 1
/// and 2^k |V(seed)| <= 64 (ResourceError otherwise).
IteratedCorona build_iterated_corona(const Graph& seed, int k);

/// For each sample x < -1, I(G*;x) is nonzero with sign (-1)^n. Requires an
/// edge; a sample >= -1 throws DomainError.
bool negative_tail_sign_check(const Graph& g, std::span<const Rational> samples,
                              const Limits& limits = {});

/// Sturm certificate: p has a real root strictly below -1.
bool has_real_root_below_minus_one(const IntPolynomial& p);

}  // namespace wcpoly
