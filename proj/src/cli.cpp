#include "wcpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "wcpoly/canonical.hpp"
#include "wcpoly/errors.hpp"
#include "wcpoly/graph.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"
#include "wcpoly/roots.hpp"
#include "wcpoly/search.hpp"
#include "wcpoly/transforms.hpp"

namespace wcpoly {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kSuites{"corona-identities", "divisibility", "multiplicity", "bijection",
                                       "bounds",            "monotonicity", "hk"};
const std::vector<std::string> kModes{"equal-poly", "spider-unique", "conjecture2", "hamidoune"};

int source_count(const CommandConfig& c) {
  return (c.input ? 1 : 0) + (c.graph6 ? 1 : 0) + (c.family ? 1 : 0) + (c.coefficients ? 1 : 0);
}

}  // namespace

void CommandConfig::validate() const {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  if (format != "graph6" && format != "edgelist") throw UsageError("--format must be graph6 or edgelist");
  if (output != "text" && output != "json") throw UsageError("--output must be text or json");
  if (max_n < 1 || max_n > 64) throw UsageError("--max-n must be between 1 and 64");
  const int sources = source_count(*this);
  if (sources > 1) throw UsageError("give exactly one input source");
  if (family && sizes.empty()) throw UsageError("--family needs --n or --parts");
  switch (command) {
    case Command::Poly:
    case Command::Corona:
      if (sources != 1 || coefficients) throw UsageError("give one graph source: --graph6, --family or --input");
      break;
    case Command::Gen:
      if (!family) throw UsageError("gen needs --family");
      break;
    case Command::Transform:
      if (!coefficients || !order) throw UsageError("transform needs --coeffs and --order");
      if (*order < 0 || *order > 64) throw UsageError("--order must be between 0 and 64");
      break;
    case Command::Roots:
      if (sources != 1) throw UsageError("roots needs --coeffs or one graph source");
      break;
    case Command::Verify:
      if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) throw UsageError("unknown suite: " + suite);
      if (graph6 || family || coefficients) throw UsageError("verify reads --input or enumerates up to --max-n");
      break;
    case Command::Search:
      if (std::find(kModes.begin(), kModes.end(), mode) == kModes.end()) throw UsageError("unknown mode: " + mode);
      if (graph6 || family || coefficients) throw UsageError("search reads --input or enumerates up to --max-n");
      break;
    case Command::Filter:
      if (!input) throw UsageError("filter needs --input");
      break;
  }
}

namespace {

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Graph family_graph(const CommandConfig& c) {
  const auto kind = family_from_name(*c.family);
  if (!kind || *kind == FamilyKind::CoronaOf) throw UsageError("unknown family: " + *c.family);
  return generate(GraphFamily{*kind, c.sizes, std::nullopt});
}

// The graphs named on the command line; `inline_source` is set for a single
// graph given by --graph6 or --family.
std::vector<Graph> load_graphs(const CommandConfig& c, std::istream& in, bool* inline_source = nullptr) {
  if (inline_source) *inline_source = !c.input;
  if (c.graph6) return {parse_graph6(*c.graph6)};
  if (c.family) return {family_graph(c)};
  if (!c.input) return {};
  const std::string text = read_all(*c.input, in);
  if (c.format == "edgelist") return {parse_edge_list(text)};
  return parse_graph6_stream(text);
}

// Input stream filtered to order <= max_n, or every graph up to max_n.
std::vector<Graph> corpus(const CommandConfig& c, std::istream& in, bool connected_only) {
  std::vector<Graph> out;
  if (c.input) {
    for (auto& g : load_graphs(c, in))
      if (g.order() <= c.max_n && (!connected_only || is_connected(g))) out.push_back(std::move(g));
    return out;
  }
  if (c.max_n > kMaxGraphEnumeration) {
    throw UsageError("--max-n above " + std::to_string(kMaxGraphEnumeration) + " requires --input");
  }
  for (int n = 1; n <= c.max_n; ++n)
    for (auto& g : enumerate_graphs(n))
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  return out;
}

// Runs check on every graph with `jobs` threads; failures keep input order.
template <class Check>
std::vector<std::string> parallel_check(const std::vector<Graph>& graphs, int jobs, Check check) {
  std::vector<std::vector<std::string>> per_graph(graphs.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, graphs.size()));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < graphs.size(); i += workers) per_graph[i] = check(graphs[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<std::string> out;
  for (auto& f : per_graph) out.insert(out.end(), f.begin(), f.end());
  return out;
}

struct SuiteResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string summary;
};

std::string label(const Graph& g) { return encode_graph6(g); }

SuiteResult suite_corona_identities(const std::vector<Graph>& graphs, const CommandConfig& c) {
  static const std::vector<Rational> points{make_rational(1, 2), make_rational(2, 1), make_rational(-1, 3),
                                            make_rational(-5, 2), make_rational(3, 7)};
  SuiteResult r;
  r.checked = graphs.size();
  r.failures = parallel_check(graphs, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const int n = g.order();
    const IntPolynomial s = independence_polynomial(g, c.limits);
    const IntPolynomial lifted = independence_polynomial(corona(g), c.limits);
    const IntPolynomial summed = corona_coefficients({s, n});
    const IntPolynomial product = corona_polynomial_identity(s, n);
    if (summed != lifted || product != lifted) f.push_back(label(g) + ": corona coefficient routes disagree");
    const auto inverse = inverse_corona_coefficients(lifted, n, s.degree());
    if (!inverse.ok() || inverse.skeleton != s) f.push_back(label(g) + ": inverse transform does not recover I(G)");
    for (const auto& x : points)
      if (!functional_identity_check(g, x, c.limits)) f.push_back(label(g) + ": functional identity fails at " + to_string(x));
    return f;
  });
  r.summary = "corona coefficients, polynomial identity and direct computation agree; inverse recovers I(G)";
  return r;
}

SuiteResult suite_divisibility(const std::vector<Graph>& graphs, const CommandConfig& c) {
  SuiteResult r;
  std::vector<Graph> with_edge;
  for (const auto& g : graphs)
    if (g.size() > 0) with_edge.push_back(g);
  r.checked = with_edge.size();
  r.failures = parallel_check(with_edge, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const auto d = divisibility_check(g, c.limits);
    if (!d.divides) f.push_back(label(g) + ": 2^" + std::to_string(d.power) + " does not divide " + d.count.get_str());
    return f;
  });
  for (int n = 2; n <= 10; ++n) {
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 3, static_cast<unsigned long>(n));
    BigInt two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    expected = 2 * (expected + two);
    if (spider_polynomial(n).sum_of_coefficients() != expected) {
      r.failures.push_back("I(S_" + std::to_string(n) + ";1) != 2(3^n + 2^(n-1))");
    }
  }
  r.summary = "I(G*;1) divisible by 2^(n - alpha); I(S_n;1) = 2(3^n + 2^(n-1)) for n = 2..10";
  return r;
}

SuiteResult suite_multiplicity(const std::vector<Graph>& graphs, const CommandConfig& c) {
  SuiteResult r;
  std::vector<Graph> selected;
  for (const auto& g : graphs)
    if (g.size() > 0 && is_connected(g)) selected.push_back(g);
  r.checked = selected.size();
  r.failures = parallel_check(selected, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const int m = multiplicity_of_minus_one(independence_polynomial(corona(g), c.limits));
    const int expected = g.order() - alpha(g, c.limits);
    if (m != expected) f.push_back(label(g) + ": m(-1) = " + std::to_string(m) + ", n - alpha = " + std::to_string(expected));
    if (has_real_root_below_minus_one(independence_polynomial(corona(g), c.limits))) {
      f.push_back(label(g) + ": corona polynomial has a real root below -1");
    }
    return f;
  });
  r.summary = "all m(-1) = n - alpha; no corona polynomial has a real root below -1";
  return r;
}

SuiteResult suite_bijection(const std::vector<Graph>& graphs, const CommandConfig& c) {
  SuiteResult r;
  std::vector<Graph> selected;
  for (const auto& g : graphs)
    if (is_connected(g) && g.order() <= 10) selected.push_back(g);
  r.checked = selected.size();
  r.failures = parallel_check(selected, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const auto report = root_bijection_check(g, c.tol, c.limits);
    for (const auto& msg : report.failures) f.push_back(label(g) + ": " + msg);
    return f;
  });
  r.summary = "x/(1-x) maps the roots of I(G) onto the roots of I(G*) other than -1";
  return r;
}

SuiteResult suite_bounds(const std::vector<Graph>& graphs, const CommandConfig& c) {
  SuiteResult r;
  std::vector<Graph> selected;
  for (const auto& g : graphs)
    if (g.order() >= 2) selected.push_back(g);
  r.checked = selected.size();
  r.failures = parallel_check(selected, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const auto report = verify_bounds(g, c.tol, c.limits);
    for (const auto& b : report.bounds)
      if (b.applicable && !b.pass) f.push_back(label(g) + ": " + b.name + " fails (margin " + std::to_string(b.margin) + ")");
    return f;
  });
  r.summary = "every applicable root-location bound holds";
  return r;
}

SuiteResult suite_monotonicity(const std::vector<Graph>& graphs, const CommandConfig& c) {
  SuiteResult r;
  r.checked = graphs.size();
  r.failures = parallel_check(graphs, c.jobs, [&](const Graph& g) {
    std::vector<std::string> f;
    const IntPolynomial s = independence_polynomial(g, c.limits);
    if (!coefficient_monotonicity_check(corona_coefficients({s, g.order()}), g.order())) {
      f.push_back(label(g) + ": corona coefficients not monotone up to ceil(n/2)");
    }
    if (g.order() <= c.limits.well_covered_max && is_well_covered(g, c.limits)) {
      if (!coefficient_ratio_check(s)) f.push_back(label(g) + ": C(a-i,j-i) s_i <= C(j,i) s_j fails");
      if (!coefficient_growth_check(s)) f.push_back(label(g) + ": s_(k-1) <= s_k fails for k <= (a-1)/2");
    }
    return f;
  });
  r.summary = "t_0 <= ... <= t_ceil(n/2); well-covered coefficient inequalities hold";
  return r;
}

SuiteResult suite_hk(const CommandConfig& c) {
  SuiteResult r;
  for (int m = 2; m <= std::min(c.max_n, 8); ++m) {
    for (const auto& seed : enumerate_trees(m)) {
      for (int k = 1; k <= 4 && (m << k) <= 64; ++k) {
        ++r.checked;
        const auto h = build_iterated_corona(seed, k);
        if (!h.verified) {
          r.failures.push_back(label(seed) + ", k = " + std::to_string(k) + ": I(H_k; -1/k) != 0");
        }
      }
    }
  }
  r.summary = "I(H_k; -1/k) = 0 for iterated coronas of trees";
  return r;
}

void emit_suite(const CommandConfig& c, const SuiteResult& r, std::ostream& out) {
  if (c.output == "json") {
    json j{{"suite", c.suite},
           {"max_n", c.max_n},
           {"checked", r.checked},
           {"failures", r.failures},
           {"pass", r.failures.empty()},
           {"summary", r.summary}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "suite " << c.suite << ": checked " << r.checked << ", failures " << r.failures.size() << "\n";
  if (r.failures.empty()) {
    out << r.summary << "\n";
  } else {
    for (const auto& f : r.failures) out << "FAIL " << f << "\n";
  }
}

int cmd_verify(const CommandConfig& c, std::ostream& out, std::istream& in) {
  SuiteResult r;
  if (c.suite == "hk") {
    r = suite_hk(c);
  } else {
    const auto graphs = corpus(c, in, false);
    if (c.suite == "corona-identities") r = suite_corona_identities(graphs, c);
    if (c.suite == "divisibility") r = suite_divisibility(graphs, c);
    if (c.suite == "multiplicity") r = suite_multiplicity(graphs, c);
    if (c.suite == "bijection") r = suite_bijection(graphs, c);
    if (c.suite == "bounds") r = suite_bounds(graphs, c);
    if (c.suite == "monotonicity") r = suite_monotonicity(graphs, c);
  }
  emit_suite(c, r, out);
  return r.failures.empty() ? kExitOk : kExitVerificationFailure;
}

json graph_record(const Graph& g, const IntPolynomial& p) {
  return {{"graph6", encode_graph6(g)}, {"order", g.order()}, {"polynomial", to_json(p)}, {"text", to_text(p)}};
}

int cmd_poly(const CommandConfig& c, std::ostream& out, std::istream& in) {
  bool single = false;
  const auto graphs = load_graphs(c, in, &single);
  json records = json::array();
  std::ostringstream text;
  for (const auto& g : graphs) {
    const IntPolynomial p = independence_polynomial(g, c.limits);
    records.push_back(graph_record(g, p));
    if (single) {
      text << to_text(p) << "\n";
    } else {
      text << encode_graph6(g) << "\t" << to_text(p) << "\n";
    }
  }
  if (c.output == "json") {
    out << json{{"graphs", records}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_corona(const CommandConfig& c, std::ostream& out, std::istream& in) {
  const auto graphs = load_graphs(c, in);
  json records = json::array();
  std::ostringstream text;
  for (const auto& g : graphs) {
    const Graph lifted = corona(g);
    const IntPolynomial p = independence_polynomial(lifted, c.limits);
    json rec = graph_record(lifted, p);
    rec["skeleton"] = encode_graph6(g);
    records.push_back(rec);
    text << encode_graph6(lifted) << "\t" << to_text(p) << "\n";
  }
  if (c.output == "json") {
    out << json{{"coronas", records}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_transform(const CommandConfig& c, std::ostream& out) {
  const IntPolynomial input = parse_polynomial(*c.coefficients);
  const int n = *c.order;
  json j{{"direction", c.inverse ? "inverse" : "forward"}, {"order", n}, {"input", to_json(input)}};
  std::ostringstream text;
  bool ok = true;
  if (!c.inverse) {
    const IntPolynomial t = corona_coefficients({input, n});
    j["output"] = to_json(t);
    text << to_text(t) << "\n";
  } else {
    if (input.degree() != n) throw UsageError("inverse transform needs a polynomial of degree --order");
    const int a = c.alpha ? *c.alpha : n - multiplicity_of_minus_one(input);
    const auto result = inverse_corona_coefficients(input, n, a);
    j["alpha"] = a;
    j["status"] = std::string(to_string(result.status));
    j["output"] = to_json(result.skeleton);
    j["first_negative"] = result.first_negative;
    text << to_text(result.skeleton) << "\n" << "status: " << to_string(result.status) << "\n";
    ok = result.ok();
  }
  if (c.output == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_roots(const CommandConfig& c, std::ostream& out, std::istream& in) {
  RootReport report;
  if (c.coefficients) {
    report = analyze_roots(parse_polynomial(*c.coefficients));
  } else {
    const auto graphs = load_graphs(c, in);
    if (graphs.size() != 1) throw UsageError("roots analyzes exactly one graph");
    report = graphs[0].order() >= 2 ? verify_bounds(graphs[0], c.tol, c.limits)
                                    : analyze_roots(independence_polynomial(graphs[0], c.limits));
  }
  if (c.output == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

std::optional<IntPolynomial> closed_form(FamilyKind kind, const std::vector<int>& sizes) {
  const int n = sizes.front();
  switch (kind) {
    case FamilyKind::Path: return path_polynomial(n);
    case FamilyKind::Spider: return spider_polynomial(n);
    case FamilyKind::Centipede: return centipede_polynomial(n);
    case FamilyKind::Complete: return IntPolynomial{1, n};
    case FamilyKind::Star: return IntPolynomial::one_plus_x_pow(n) + IntPolynomial{0, 1};
    case FamilyKind::CompleteMultipartite: return complete_multipartite_polynomial(sizes);
    case FamilyKind::Cycle: return cycle_leaf_polynomial(n);
    case FamilyKind::Edgeless: return IntPolynomial::one_plus_x_pow(n);
    case FamilyKind::CoronaOf: break;
  }
  return std::nullopt;
}

int cmd_gen(const CommandConfig& c, std::ostream& out) {
  const Graph g = family_graph(c);
  const auto kind = *family_from_name(*c.family);
  const IntPolynomial p = independence_polynomial(g, c.limits);
  const auto formula = closed_form(kind, c.sizes);
  const bool agree = !formula || *formula == p;
  if (c.output == "json") {
    json j = graph_record(g, p);
    j["family"] = *c.family;
    j["sizes"] = c.sizes;
    if (formula) j["closed_form"] = to_json(*formula);
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << encode_graph6(g) << "\n" << to_text(p) << "\n";
    if (formula) out << "closed form " << (agree ? "agrees" : "DIFFERS: " + to_text(*formula)) << "\n";
  }
  return agree ? kExitOk : kExitVerificationFailure;
}

std::unique_ptr<std::ofstream> open_evidence(const CommandConfig& c) {
  if (!c.evidence) return nullptr;
  auto file = std::make_unique<std::ofstream>(*c.evidence);
  if (!*file) throw UsageError("cannot write " + *c.evidence);
  return file;
}

int cmd_search(const CommandConfig& c, std::ostream& out, std::ostream& err, std::istream& in) {
  const bool as_json = c.output == "json";
  if (c.mode == "equal-poly") {
    const auto graphs = corpus(c, in, false);
    GroupOptions options;
    options.jobs = c.jobs;
    options.limits = c.limits;
    const auto report = group_by_polynomial(graphs, options, c.input ? *c.input : "all graphs up to " + std::to_string(c.max_n));
    out << (as_json ? to_json(report).dump(2) + "\n" : summary_table(report));
    return kExitOk;
  }
  if (c.mode == "spider-unique") {
    if (c.max_n > 8) throw UsageError("spider-unique supports --max-n up to 8");
    const auto spiders = spider_uniqueness_scan(c.max_n);
    std::vector<Graph> trees;
    for (int m = 2; m <= c.max_n; ++m)
      for (auto& t : enumerate_trees(m)) trees.push_back(std::move(t));
    const auto stars = star_multiplicity_scan(trees, c.limits);
    const bool pass = spiders.violations.empty() && stars.violations.empty();
    if (as_json) {
      out << json{{"spider_uniqueness", to_json(spiders)}, {"star_multiplicity", to_json(stars)}, {"pass", pass}}.dump(2)
          << "\n";
    } else {
      out << "skeletons " << spiders.skeletons << ", skipped by m(-1) >= 2: " << spiders.skipped_by_multiplicity
          << ", candidates " << spiders.candidates << ", matches " << spiders.matches.size() << "\n";
      out << "trees with m(-1) = 1: " << stars.simple_root << " of " << stars.skeletons << "\n";
      for (const auto& v : spiders.violations) out << "VIOLATION " << v << "\n";
      for (const auto& v : stars.violations) out << "VIOLATION " << v << "\n";
      if (pass) out << "only stars match spider polynomials\n";
    }
    return pass ? kExitOk : kExitVerificationFailure;
  }
  auto evidence = open_evidence(c);
  if (c.mode == "conjecture2") {
    const auto graphs = corpus(c, in, false);
    const auto report = conjecture2_scan(graphs, c.max_tree_order, evidence.get(), c.limits);
    if (report.skipped_disconnected > 0) {
      err << "warning: skipped " << report.skipped_disconnected << " disconnected graphs\n";
    }
    if (as_json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << "scanned " << report.scanned << ", index " << report.index_size << " well-covered tree polynomials, matches "
          << report.matches << ", supporting " << report.supporting << ", counterexamples "
          << report.counterexamples.size() << "\n";
      for (const auto& g6 : report.counterexamples) out << "COUNTEREXAMPLE " << g6 << "\n";
      if (report.counterexamples.empty())
        out << "no counterexample among the scanned graphs (well-covered trees up to " << report.max_tree_order << ")\n";
    }
    return report.counterexamples.empty() ? kExitOk : kExitVerificationFailure;
  }
  const auto graphs = corpus(c, in, false);
  const auto report = hamidoune_scan(graphs, evidence.get(), c.limits);
  if (as_json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "scanned " << report.scanned << ", claw-free " << report.claw_free << ", claw-free with all roots real "
        << report.claw_free_all_real << ", non-claw-free with non-real roots " << report.non_real_contrast.size() << "\n";
    for (const auto& g6 : report.failures) out << "FAIL " << g6 << "\n";
    if (report.failures.empty()) out << "no claw-free graph with a non-real root among the scanned graphs\n";
  }
  return report.failures.empty() ? kExitOk : kExitVerificationFailure;
}

int cmd_filter(const CommandConfig& c, std::ostream& out, std::istream& in) {
  std::ifstream file;
  std::istream* source = &in;
  if (*c.input != "-") {
    file.open(*c.input, std::ios::binary);
    if (!file) throw UsageError("cannot open " + *c.input);
    source = &file;
  }
  std::string line;
  while (std::getline(*source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    const Graph g = parse_graph6(line);
    if (c.connected && !is_connected(g)) continue;
    if (c.well_covered && !is_well_covered(g, c.limits)) continue;
    out << line << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    config.validate();
    switch (config.command) {
      case Command::Poly: return cmd_poly(config, out, in);
      case Command::Corona: return cmd_corona(config, out, in);
      case Command::Transform: return cmd_transform(config, out);
      case Command::Roots: return cmd_roots(config, out, in);
      case Command::Gen: return cmd_gen(config, out);
      case Command::Verify: return cmd_verify(config, out, in);
      case Command::Search: return cmd_search(config, out, err, in);
      case Command::Filter: return cmd_filter(config, out, in);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CommandConfig config;
  try {
    config.limits = Limits::from_env();
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Independence polynomials of graphs and their coronas", "wcpoly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_graph_source = [&](CLI::App* sub) {
    sub->add_option("--graph6", config.graph6, "graph in graph6");
    sub->add_option("--family", config.family, "path|cycle|complete|multipartite|star|spider|centipede|edgeless");
    sub->add_option("--n", config.sizes, "family size");
    sub->add_option("--parts", config.sizes, "multipartite part sizes")->delimiter(',');
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "graph file, or - for stdin");
    sub->add_option("--format", config.format, "graph6|edgelist");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "text|json");
    sub->add_option("--tol", config.tol, "numeric tolerance");
    sub->add_option("--jobs", config.jobs, "worker threads");
  };

  auto* poly = app.add_subcommand("poly", "print I(G;x)");
  add_graph_source(poly);
  add_input(poly);
  add_common(poly);

  auto* cor = app.add_subcommand("corona", "print G* and I(G*;x)");
  add_graph_source(cor);
  add_input(cor);
  add_common(cor);

  auto* transform = app.add_subcommand("transform", "corona coefficient transform or its inverse");
  transform->add_option("--coeffs", config.coefficients, "coefficients, lowest degree first")->required();
  transform->add_option("--order", config.order, "skeleton order n")->required();
  transform->add_option("--alpha", config.alpha, "skeleton stability number (inverse)");
  transform->add_flag("--inverse", config.inverse, "recover s from t");
  add_common(transform);

  auto* roots = app.add_subcommand("roots", "root report and bound checks");
  add_graph_source(roots);
  add_input(roots);
  roots->add_option("--coeffs", config.coefficients, "analyze a polynomial instead of a graph");
  add_common(roots);

  auto* gen = app.add_subcommand("gen", "generate a family member with its closed form");
  gen->add_option("--family", config.family, "spider|centipede|path|complete|star|multipartite|cycle|edgeless")->required();
  gen->add_option("--n", config.sizes, "family size");
  gen->add_option("--parts", config.sizes, "multipartite part sizes")->delimiter(',');
  add_common(gen);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", config.suite, "corona-identities|divisibility|multiplicity|bijection|bounds|monotonicity|hk")
      ->required();
  auto* verify_max = verify->add_option("--max-n", config.max_n, "largest order checked");
  add_input(verify);
  add_common(verify);

  auto* search = app.add_subcommand("search", "equivalence and conjecture scans");
  search->add_option("--mode", config.mode, "equal-poly|spider-unique|conjecture2|hamidoune")->required();
  auto* search_max = search->add_option("--max-n", config.max_n, "largest order checked");
  search->add_option("--max-tree-order", config.max_tree_order, "well-covered tree index size (conjecture2)");
  search->add_option("--evidence", config.evidence, "JSON lines evidence file");
  add_input(search);
  add_common(search);

  auto* filter = app.add_subcommand("filter", "copy the graph6 lines that satisfy the predicates");
  filter->add_flag("--well-covered", config.well_covered, "keep well-covered graphs");
  filter->add_flag("--connected", config.connected, "keep connected graphs");
  add_input(filter);

  std::vector<std::string> argv_storage{"wcpoly"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {poly, Command::Poly},     {cor, Command::Corona},       {transform, Command::Transform},
      {roots, Command::Roots},   {gen, Command::Gen},          {verify, Command::Verify},
      {search, Command::Search}, {filter, Command::Filter},
  };
  for (const auto& [sub, command] : table)
    if (sub->parsed()) config.command = command;
  // an input stream is taken whole unless --max-n is given
  if (config.input && verify_max->count() == 0 && search_max->count() == 0) config.max_n = 64;
  return run(config, out, err, in);
}

}  // namespace wcpoly
