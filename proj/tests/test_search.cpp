#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "figures.hpp"
#include "oracles.hpp"
#include "wcpoly/canonical.hpp"
#include "wcpoly/errors.hpp"
#include "wcpoly/indpoly.hpp"
#include "wcpoly/predicates.hpp"
#include "wcpoly/search.hpp"
#include "wcpoly/transforms.hpp"

using namespace wcpoly;

namespace {

std::vector<Graph> load(const std::string& name) {
  std::ifstream in(std::string(WCPOLY_DATA_DIR) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph6_stream(buffer.str());
}

std::vector<Graph> connected_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : enumerate_graphs(k))
      if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("equal polynomials, different graphs") {
    const std::vector<Graph> pairs{figures::pentagon(), figures::triangle_with_tails(),
                                   figures::six_vertex_tree(), figures::diamond_plus_two()};
    const auto report = group_by_polynomial(pairs);
    CHECK(report.graphs == 4);
    CHECK(report.classes.size() == 2);
    CHECK(report.non_singleton_classes() == 2);
    CHECK(report.non_isomorphic_classes() == 2);
    for (const auto& c : report.classes) {
      CHECK(c.members.size() == 2);
      CHECK_FALSE(c.all_isomorphic);
    }
    CHECK(report.find(IntPolynomial{1, 5, 5}) != nullptr);
    CHECK(report.find(IntPolynomial{1, 2}) == nullptr);
  }

  TEST_CASE("trees on 10 vertices") {
    const auto trees = load("trees10.g6");
    REQUIRE(trees.size() == 106);
    GroupOptions options;
    options.jobs = 3;
    const auto report = group_by_polynomial(trees, options, "trees10");
    const auto* c = report.find(IntPolynomial{1, 10, 36, 58, 42, 12, 1});
    REQUIRE(c != nullptr);
    CHECK(c->members.size() >= 2);
    CHECK_FALSE(c->all_isomorphic);
    std::size_t total = 0;
    for (const auto& k : report.classes) {
      total += k.members.size();
      for (const auto& m : k.members) CHECK(independence_polynomial(parse_graph6(m)) == k.polynomial);
      CHECK(std::is_sorted(k.members.begin(), k.members.end()));
    }
    CHECK(total == 106);
    CHECK(report.failures.empty());
    const auto json = to_json(report);
    CHECK(json["graphs"] == 106);
    CHECK(summary_table(report).find("1 + 10x + 36x^2") != std::string::npos);
  }

  TEST_CASE("partition does not depend on order or slicing") {
    auto graphs = connected_up_to(6);
    const auto whole = to_json(group_by_polynomial(graphs)).dump();
    std::mt19937_64 rng(71);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(graphs.begin(), graphs.end(), rng);
      const std::size_t cut = graphs.size() * (t + 1) / 7;
      EquivalenceIndex left, right;
      for (std::size_t i = 0; i < graphs.size(); ++i) (i < cut ? left : right).add(graphs[i]);
      right.merge(std::move(left));
      CHECK(to_json(right.finish("stream")).dump() == whole);
    }
    GroupOptions parallel;
    parallel.jobs = 4;
    CHECK(to_json(group_by_polynomial(graphs, parallel)).dump() == whole);
  }

  TEST_CASE("isomorphism flags agree with search") {
    const auto graphs = connected_up_to(6);
    const auto report = group_by_polynomial(graphs);
    for (const auto& c : report.classes) {
      bool all = true;
      for (std::size_t i = 1; i < c.members.size(); ++i)
        all = all && isomorphic_by_search(parse_graph6(c.members[0]), parse_graph6(c.members[i]));
      CHECK(c.all_isomorphic == all);
    }
  }

  TEST_CASE("equal polynomials survive the corona") {
    CHECK(corona_equivalence_check(figures::pentagon(), figures::triangle_with_tails()));
    CHECK(corona_equivalence_check(figures::pentagon(), path_graph(5)));
    std::mt19937_64 rng(73);
    int equal = 0;
    for (int t = 0; t < 500; ++t) {
      const int n = 3 + t % 5;
      const Graph g = oracle::random_graph(n, 0.4, rng);
      const Graph h = t % 3 == 0 ? oracle::relabel(g, rng) : oracle::random_graph(n, 0.4, rng);
      if (independence_polynomial(g) == independence_polynomial(h)) ++equal;
      CHECK(corona_equivalence_check(g, h));
    }
    CHECK(equal > 100);
  }

  TEST_CASE("spiders are determined by their polynomial") {
    for (int n = 2; n <= 10; ++n)
      CHECK(spider_polynomial(n) == oracle::independence_polynomial(spider_graph(n)));
    const auto r = spider_uniqueness_scan(8);
    CHECK(r.violations.empty());
    CHECK(r.skeletons == 1 + 2 + 3 + 6 + 11 + 23);  // trees on 3..8 vertices
    CHECK(r.matches.size() == 6);
    for (const auto& m : r.matches) CHECK(is_star(parse_graph6(m)));
    CHECK_THROWS_AS(spider_uniqueness_scan(9), ResourceError);
    CHECK(to_json(r)["violations"].empty());
  }

  TEST_CASE("simple root at -1 exactly for stars") {
    std::vector<Graph> skeletons;
    for (auto& g : connected_up_to(7))
      if (g.size() > 0) skeletons.push_back(std::move(g));
    const auto r = star_multiplicity_scan(skeletons);
    CHECK(r.violations.empty());
    CHECK(r.skeletons == static_cast<int>(skeletons.size()));
    CHECK(r.simple_root == 6);  // K_{1,1} .. K_{1,6}
  }

  TEST_CASE("well-covered tree polynomials") {
    std::vector<Graph> stream{figures::fork_tree(), figures::square_plus_point(), path_graph(4),
                              figures::ladder_with_diagonals(), figures::path_with_two_apexes()};
    std::ostringstream evidence;
    const auto r = conjecture2_scan(stream, 8, &evidence);
    CHECK(r.counterexamples.empty());
    CHECK(r.skipped_disconnected == 1);
    CHECK(r.scanned == 5);
    CHECK(r.matches >= 1);
    CHECK(r.supporting >= 1);
    CHECK(r.index_size >= 5);  // K1 plus coronas of trees on 1..4 vertices
    std::istringstream lines(evidence.str());
    std::string line;
    int parsed = 0;
    while (std::getline(lines, line)) {
      CHECK(nlohmann::json::accept(line));
      ++parsed;
    }
    CHECK(parsed >= 1);

    const auto wide = conjecture2_scan(connected_up_to(7), 14);
    CHECK(wide.counterexamples.empty());
    CHECK(wide.matches >= wide.supporting);
    CHECK(wide.supporting >= 4);
  }

  TEST_CASE("claw-free graphs have real roots") {
    const auto r = hamidoune_scan(connected_up_to(6));
    CHECK(r.failures.empty());
    CHECK(r.claw_free == r.claw_free_all_real);
    CHECK(r.claw_free > 0);
    const std::vector<Graph> claw{figures::claw_tree()};
    const auto c = hamidoune_scan(claw);
    CHECK(c.claw_free == 0);
    CHECK(c.non_real_contrast.size() == 1);
    CHECK(to_json(r)["failures"].empty());
  }

  TEST_CASE("hex encoding") {
    CHECK(hex_encode(std::string("\x01\xab", 2)) == "01ab");
    CHECK(hex_encode("") == "");
  }
}
