#include "wcpoly/search.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "wcpoly/canonical.hpp"
#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"
#include "wcpoly/roots.hpp"
#include "wcpoly/transforms.hpp"

namespace wcpoly {

std::string hex_encode(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

// ---- equal-polynomial classes -------------------------------------------

std::size_t EquivalenceReport::non_singleton_classes() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const EquivalenceClass& c) { return c.members.size() > 1; }));
}

std::size_t EquivalenceReport::non_isomorphic_classes() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const EquivalenceClass& c) {
    return c.members.size() > 1 && !c.all_isomorphic;
  }));
}

const EquivalenceClass* EquivalenceReport::find(const IntPolynomial& p) const {
  for (const auto& c : classes)
    if (c.polynomial == p) return &c;
  return nullptr;
}

EquivalenceIndex::EquivalenceIndex(GroupOptions options) : options_(std::move(options)) {}

void EquivalenceIndex::add(const Graph& g) {
  ++graphs_;
  const std::string g6 = encode_graph6(g);
  IntPolynomial p;
  try {
    p = independence_polynomial(g, options_.limits);
  } catch (const std::exception& e) {
    failures_.push_back(g6 + ": " + e.what());
    return;
  }
  std::string code;
  if (options_.isomorphism) {
    try {
      code = canonical_code(g, options_.limits);
    } catch (const std::exception& e) {
      failures_.push_back(g6 + ": " + e.what());
    }
  }
  auto [it, inserted] = buckets_.try_emplace(polynomial_key(p));
  if (inserted) it->second.polynomial = std::move(p);
  it->second.members.push_back({g6, std::move(code)});
}

void EquivalenceIndex::merge(EquivalenceIndex&& other) {
  for (auto& [key, bucket] : other.buckets_) {
    auto [it, inserted] = buckets_.try_emplace(key);
    if (inserted) it->second.polynomial = std::move(bucket.polynomial);
    auto& dst = it->second.members;
    dst.insert(dst.end(), std::make_move_iterator(bucket.members.begin()),
               std::make_move_iterator(bucket.members.end()));
  }
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  graphs_ += other.graphs_;
  other.buckets_.clear();
  other.failures_.clear();
  other.graphs_ = 0;
}

EquivalenceReport EquivalenceIndex::finish(std::string source) const {
  EquivalenceReport report;
  report.source = std::move(source);
  report.graphs = graphs_;
  report.failures = failures_;
  std::sort(report.failures.begin(), report.failures.end());
  for (const auto& [key, bucket] : buckets_) {
    auto members = bucket.members;
    std::sort(members.begin(), members.end(),
              [](const Member& a, const Member& b) { return std::tie(a.graph6, a.code) < std::tie(b.graph6, b.code); });
    EquivalenceClass cls;
    cls.polynomial = bucket.polynomial;
    for (const auto& m : members) {
      cls.members.push_back(m.graph6);
      cls.canonical_codes.push_back(hex_encode(m.code));
      if (m.code.empty() || m.code != members.front().code) cls.all_isomorphic = false;
    }
    if (!options_.isomorphism) cls.all_isomorphic = members.size() <= 1;
    report.classes.push_back(std::move(cls));
  }
  return report;
}

EquivalenceReport group_by_polynomial(std::span<const Graph> graphs, const GroupOptions& options, std::string source) {
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(graphs.size())));
  if (jobs <= 1) {
    EquivalenceIndex index(options);
    for (const auto& g : graphs) index.add(g);
    return index.finish(std::move(source));
  }
  std::vector<EquivalenceIndex> parts(static_cast<std::size_t>(jobs), EquivalenceIndex(options));
  std::vector<std::thread> workers;
  const std::size_t chunk = (graphs.size() + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      const std::size_t begin = std::min(graphs.size(), j * chunk);
      const std::size_t end = std::min(graphs.size(), begin + chunk);
      for (std::size_t i = begin; i < end; ++i) parts[j].add(graphs[i]);
    });
  }
  for (auto& w : workers) w.join();
  for (std::size_t j = 1; j < parts.size(); ++j) parts[0].merge(std::move(parts[j]));
  return parts[0].finish(std::move(source));
}

nlohmann::json to_json(const EquivalenceReport& report) {
  nlohmann::json j;
  j["source"] = report.source;
  j["graphs"] = report.graphs;
  j["class_count"] = report.classes.size();
  j["non_singleton_classes"] = report.non_singleton_classes();
  j["non_isomorphic_classes"] = report.non_isomorphic_classes();
  auto classes = nlohmann::json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"polynomial", to_json(c.polynomial)},
                       {"members", c.members},
                       {"canonical_codes", c.canonical_codes},
                       {"all_isomorphic", c.all_isomorphic}});
  }
  j["classes"] = classes;
  j["failures"] = report.failures;
  return j;
}

std::string summary_table(const EquivalenceReport& report) {
  std::ostringstream out;
  out << "source: " << report.source << "\n";
  out << "graphs: " << report.graphs << "\n";
  out << "classes: " << report.classes.size() << "\n";
  out << "non-singleton classes: " << report.non_singleton_classes() << "\n";
  out << "classes with non-isomorphic members: " << report.non_isomorphic_classes() << "\n";
  out << "failures: " << report.failures.size() << "\n";
  for (const auto& c : report.classes) {
    if (c.members.size() < 2) continue;
    out << "  " << to_text(c.polynomial) << "  [" << c.members.size() << "]"
        << (c.all_isomorphic ? "" : " non-isomorphic") << ":";
    for (const auto& m : c.members) out << " " << m;
    out << "\n";
  }
  return out.str();
}

bool corona_equivalence_check(const Graph& g, const Graph& h, const Limits& limits) {
  const bool base = independence_polynomial(g, limits) == independence_polynomial(h, limits);
  const bool lifted = independence_polynomial(corona(g), limits) == independence_polynomial(corona(h), limits);
  return base == lifted;
}

// ---- spiders ---------------------------------------------------------

SpiderScanReport spider_uniqueness_scan(int max_skeleton) {
  if (max_skeleton > 8) throw ResourceError("spider_uniqueness_scan supports skeletons of at most 8 vertices");
  SpiderScanReport report;
  for (int m = 3; m <= max_skeleton; ++m) {
    const IntPolynomial spider = spider_polynomial(m - 1);
    for (const auto& t : enumerate_trees(m)) {
      ++report.skeletons;
      const IntPolynomial p = independence_polynomial_tree(corona(t));
      const bool star = is_star(t);
      if (multiplicity_of_minus_one(p) >= 2) {
        ++report.skipped_by_multiplicity;
        if (star) report.violations.push_back("star " + encode_graph6(t) + " has m(-1) >= 2");
        continue;
      }
      ++report.candidates;
      const bool match = p == spider;
      if (match) report.matches.push_back(encode_graph6(t));
      if (match != star) {
        report.violations.push_back(encode_graph6(t) + (star ? ": star corona differs from the spider polynomial"
                                                              : ": non-star corona matches the spider polynomial"));
      }
    }
  }
  return report;
}

StarMultiplicityReport star_multiplicity_scan(std::span<const Graph> skeletons, const Limits& limits) {
  StarMultiplicityReport report;
  for (const auto& g : skeletons) {
    if (g.size() == 0 || !is_connected(g)) continue;
    ++report.skeletons;
    const int m = multiplicity_of_minus_one(independence_polynomial(corona(g), limits));
    const bool simple = m == 1;
    if (simple) ++report.simple_root;
    if (simple != is_star(g)) {
      report.violations.push_back(encode_graph6(g) + ": m(-1) = " + std::to_string(m) +
                                  (is_star(g) ? " for a star" : " for a non-star"));
    }
  }
  return report;
}

// ---- conjecture scans ------------------------------------------------

namespace {

bool is_well_covered_tree(const Graph& g) {
  if (!is_tree(g)) return false;
  return g.order() == 1 || pendant_edges_form_perfect_matching(g);
}

}  // namespace

Conjecture2Report conjecture2_scan(std::span<const Graph> graphs, int max_tree_order, std::ostream* evidence,
                                   const Limits& limits) {
  if (max_tree_order < 1) throw DomainError("max_tree_order must be positive");
  if (max_tree_order / 2 > kMaxTreeEnumeration) throw ResourceError("tree index too large");
  Conjecture2Report report;
  report.max_tree_order = max_tree_order;

  std::map<std::string, std::string> index;  // polynomial key -> a witness tree
  index.emplace(polynomial_key(IntPolynomial{1, 1}), encode_graph6(Graph(1)));
  for (int m = 1; 2 * m <= max_tree_order; ++m) {
    for (const auto& t : enumerate_trees(m)) {
      const Graph lifted = corona(t);
      index.emplace(polynomial_key(independence_polynomial_tree(lifted, limits)), encode_graph6(lifted));
    }
  }
  report.index_size = index.size();

  for (const auto& g : graphs) {
    ++report.scanned;
    if (!is_connected(g)) {
      ++report.skipped_disconnected;
      continue;
    }
    const IntPolynomial p = independence_polynomial(g, limits);
    const auto it = index.find(polynomial_key(p));
    if (it == index.end()) continue;
    ++report.matches;
    const bool supporting = is_well_covered_tree(g);
    const std::string g6 = encode_graph6(g);
    if (supporting) {
      ++report.supporting;
    } else {
      report.counterexamples.push_back(g6);
    }
    if (evidence) {
      nlohmann::json line{{"graph6", g6},
                          {"polynomial", to_json(p)},
                          {"witness", it->second},
                          {"well_covered_tree", supporting}};
      *evidence << line.dump() << "\n";
    }
  }
  return report;
}

HamidouneReport hamidoune_scan(std::span<const Graph> graphs, std::ostream* evidence, const Limits& limits) {
  HamidouneReport report;
  for (const auto& g : graphs) {
    ++report.scanned;
    HamidouneVerdict v{encode_graph6(g), is_claw_free(g), false};
    const IntPolynomial p = independence_polynomial(g, limits);
    v.all_real = all_roots_real(p);
    if (v.claw_free) {
      ++report.claw_free;
      if (v.all_real) {
        ++report.claw_free_all_real;
      } else {
        report.failures.push_back(v.graph6);
      }
    } else if (!v.all_real) {
      report.non_real_contrast.push_back(v.graph6);
    }
    if (evidence) {
      nlohmann::json line{{"graph6", v.graph6}, {"claw_free", v.claw_free}, {"all_real", v.all_real},
                          {"polynomial", to_json(p)}};
      *evidence << line.dump() << "\n";
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

nlohmann::json to_json(const SpiderScanReport& r) {
  return {{"skeletons", r.skeletons},
          {"skipped_by_multiplicity", r.skipped_by_multiplicity},
          {"candidates", r.candidates},
          {"matches", r.matches},
          {"violations", r.violations}};
}

nlohmann::json to_json(const StarMultiplicityReport& r) {
  return {{"skeletons", r.skeletons}, {"simple_root", r.simple_root}, {"violations", r.violations}};
}

nlohmann::json to_json(const Conjecture2Report& r) {
  return {{"max_tree_order", r.max_tree_order},
          {"index_size", r.index_size},
          {"scanned", r.scanned},
          {"skipped_disconnected", r.skipped_disconnected},
          {"matches", r.matches},
          {"supporting", r.supporting},
          {"counterexamples", r.counterexamples}};
}

nlohmann::json to_json(const HamidouneReport& r) {
  return {{"scanned", r.scanned},
          {"claw_free", r.claw_free},
          {"claw_free_all_real", r.claw_free_all_real},
          {"failures", r.failures},
          {"non_real_contrast_count", r.non_real_contrast.size()}};
}

}  // namespace wcpoly
