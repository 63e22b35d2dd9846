#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcpoly/graph.hpp"
#include "wcpoly/limits.hpp"
#include "wcpoly/polynomial.hpp"

namespace wcpoly {

// ---- equal-polynomial classes -------------------------------------------

struct EquivalenceClass {
  IntPolynomial polynomial;
  std::vector<std::string> members;          // graph6, sorted
  std::vector<std::string> canonical_codes;  // hex, parallel to members
  bool all_isomorphic = true;
};

struct EquivalenceReport {
  std::string source;
  std::vector<EquivalenceClass> classes;     // ordered by polynomial key
  std::vector<std::string> failures;         // per-graph errors, stream continued
  std::size_t graphs = 0;

  std::size_t non_singleton_classes() const;
  std::size_t non_isomorphic_classes() const;
  /// Class whose polynomial equals p, or nullptr.
  const EquivalenceClass* find(const IntPolynomial& p) const;
};

struct GroupOptions {
  bool isomorphism = true;  // compute canonical codes and all_isomorphic flags
  int jobs = 1;
  Limits limits;
};

/// Partition keyed by the exact decimal serialization of I(G;x).
///
/// Partial indexes built on disjoint slices of a stream merge associatively
/// and commutatively; the finished report is independent of input order.
class EquivalenceIndex {
 public:
  explicit EquivalenceIndex(GroupOptions options = {});

  void add(const Graph& g);
  void merge(EquivalenceIndex&& other);
  EquivalenceReport finish(std::string source) const;

 private:
  struct Member {
    std::string graph6;
    std::string code;
  };
  struct Bucket {
    IntPolynomial polynomial;
    std::vector<Member> members;
  };

  GroupOptions options_;
  std::map<std::string, Bucket> buckets_;
  std::vector<std::string> failures_;
  std::size_t graphs_ = 0;
};

EquivalenceReport group_by_polynomial(std::span<const Graph> graphs, const GroupOptions& options = {},
                                      std::string source = "stream");

nlohmann::json to_json(const EquivalenceReport& report);
std::string summary_table(const EquivalenceReport& report);

/// I(G) = I(H) iff I(G*) = I(H*); true whenever the biconditional holds.
bool corona_equivalence_check(const Graph& g, const Graph& h, const Limits& limits = {});

// ---- spiders ---------------------------------------------------------

struct SpiderScanReport {
  int skeletons = 0;               // trees scanned
  int skipped_by_multiplicity = 0; // coronas with m(-1) >= 2
  int candidates = 0;              // compared against spider_polynomial
  std::vector<std::string> matches;     // graph6 of matching skeletons
  std::vector<std::string> violations;  // readable descriptions; expected empty
};

/// Compares I(T*) against I(S_{n-1}) for every tree T on 3..max_skeleton
/// vertices. Only stars may match. Requires max_skeleton <= 8.
SpiderScanReport spider_uniqueness_scan(int max_skeleton);

struct StarMultiplicityReport {
  int skeletons = 0;
  int simple_root = 0;  // m(-1) == 1
  std::vector<std::string> violations;
};

/// For each connected skeleton with an edge: m(-1) of I(G*) equals 1 iff G
/// is a star K_{1,n}.
StarMultiplicityReport star_multiplicity_scan(std::span<const Graph> skeletons,
                                              const Limits& limits = {});

// ---- conjecture scans ------------------------------------------------

struct Conjecture2Report {
  int max_tree_order = 0;
  std::size_t index_size = 0;      // well-covered trees indexed
  int scanned = 0;
  int skipped_disconnected = 0;
  int matches = 0;                 // stream graphs sharing a polynomial with the index
  int supporting = 0;              // matches that are themselves well-covered trees
  std::vector<std::string> counterexamples;
};

/// Indexes I(T) for every well-covered tree T of order <= max_tree_order
/// (K_1 and coronas of trees), then checks each connected stream graph with
/// an indexed polynomial for being a well-covered tree. Evidence lines
/// (JSON) are written to evidence when non-null.
Conjecture2Report conjecture2_scan(std::span<const Graph> graphs, int max_tree_order,
                                   std::ostream* evidence = nullptr, const Limits& limits = {});

struct HamidouneVerdict {
  std::string graph6;
  bool claw_free = false;
  bool all_real = false;
};

struct HamidouneReport {
  int scanned = 0;
  int claw_free = 0;
  int claw_free_all_real = 0;
  std::vector<std::string> failures;        // claw-free with a non-real root
  std::vector<std::string> non_real_contrast; // not claw-free, non-real roots
  std::vector<HamidouneVerdict> verdicts;
};

/// Exact all-real-rootedness of I(G;x) for each graph, split by claw-freeness.
HamidouneReport hamidoune_scan(std::span<const Graph> graphs, std::ostream* evidence = nullptr,
                               const Limits& limits = {});

nlohmann::json to_json(const SpiderScanReport& r);
nlohmann::json to_json(const StarMultiplicityReport& r);
nlohmann::json to_json(const Conjecture2Report& r);
nlohmann::json to_json(const HamidouneReport& r);

std::string hex_encode(const std::string& bytes);

}  // namespace wcpoly
