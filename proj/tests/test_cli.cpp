#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "wcpoly/cli.hpp"

using namespace wcpoly;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_args(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  Result r;
  r.code = run_command_line(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kTrees = std::string(WCPOLY_DATA_DIR) + "/trees10.g6";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("poly") {
    const auto r = run_args({"poly", "--family", "path", "--n", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1 + 4x + 3x^2\n");
    CHECK(run_args({"poly", "--graph6", "Ch"}).out == r.out);
    CHECK(run_args({"poly", "--input", "-"}, "Ch\nA_\n").out == "Ch\t1 + 4x + 3x^2\nA_\t1 + 2x\n");
    CHECK(run_args({"poly", "--input", "-", "--format", "edgelist"}, "3\n0 1\n1 2\n").out == "Bg\t1 + 3x + x^2\n");
    const auto j = nlohmann::json::parse(run_args({"poly", "--family", "path", "--n", "4", "--output", "json"}).out);
    CHECK(j["graphs"][0]["text"] == "1 + 4x + 3x^2");
  }

  TEST_CASE("corona and transform") {
    const auto j = nlohmann::json::parse(run_args({"corona", "--graph6", "A_", "--output", "json"}).out);
    CHECK(j["coronas"][0]["text"] == "1 + 4x + 3x^2");
    CHECK(run_args({"transform", "--coeffs", "1,2", "--order", "2"}).out == "1 + 4x + 3x^2\n");
    const auto inv = nlohmann::json::parse(
        run_args({"transform", "--coeffs", "1,4,3", "--order", "2", "--inverse", "--output", "json"}).out);
    CHECK(inv["status"] == "ok");
    CHECK(inv["output"] == nlohmann::json::array({"1", "2"}));
    CHECK(run_args({"transform", "--coeffs", "1,3,1", "--order", "2", "--inverse", "--alpha", "1"}).code ==
          kExitVerificationFailure);
  }

  TEST_CASE("roots and gen") {
    const auto r = run_args({"roots", "--coeffs", "1,3,1", "--output", "json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["real_roots"].size() == 2);
    CHECK(run_args({"roots", "--family", "complete", "--n", "3"}).code == kExitOk);
    const auto g = run_args({"gen", "--family", "spider", "--n", "3"});
    CHECK(g.code == kExitOk);
    CHECK(g.out.find("1 + 8x + 21x^2 + 23x^3 + 9x^4") != std::string::npos);
  }

  TEST_CASE("verify suites") {
    const auto r = run_args({"verify", "--suite", "multiplicity", "--max-n", "7"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("all m(-1) = n - alpha") != std::string::npos);
    for (const char* suite : {"corona-identities", "divisibility", "bijection", "bounds", "monotonicity", "hk"})
      CHECK(run_args({"verify", "--suite", suite, "--max-n", "5"}).code == kExitOk);
  }

  TEST_CASE("text and json carry the same data") {
    const auto text = run_args({"verify", "--suite", "divisibility", "--max-n", "5"}).out;
    const auto j = nlohmann::json::parse(run_args({"verify", "--suite", "divisibility", "--max-n", "5", "--output", "json"}).out);
    CHECK(j["pass"] == true);
    CHECK(text.find("checked " + std::to_string(j["checked"].get<int>())) != std::string::npos);
    CHECK(text.find(j["summary"].get<std::string>()) != std::string::npos);
  }

  TEST_CASE("search") {
    const auto r = run_args({"search", "--mode", "equal-poly", "--input", kTrees});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1 + 10x + 36x^2 + 58x^3 + 42x^4 + 12x^5 + x^6") != std::string::npos);
    const auto j = nlohmann::json::parse(run_args({"search", "--mode", "equal-poly", "--input", kTrees, "--output", "json"}).out);
    CHECK(j["graphs"] == 106);
    CHECK(run_args({"search", "--mode", "spider-unique", "--max-n", "6"}).code == kExitOk);
    CHECK(run_args({"search", "--mode", "hamidoune", "--max-n", "5"}).code == kExitOk);
    CHECK(run_args({"search", "--mode", "conjecture2", "--max-n", "5", "--max-tree-order", "8"}).code == kExitOk);
  }

  TEST_CASE("filter") {
    const auto r = run_args({"filter", "--well-covered", "--input", "-"}, "Ch\nBw\nA_\n");
    CHECK(r.out == "Ch\nBw\nA_\n");
    CHECK(run_args({"filter", "--well-covered", "--input", "-"}, "Bg\n").out.empty());
  }

  TEST_CASE("exit codes") {
    CHECK(run_args({"poly"}).code == kExitUsage);
    CHECK(run_args({"poly", "--graph6", "A_", "--family", "path", "--n", "2"}).code == kExitUsage);
    CHECK(run_args({"poly", "--graph6", "A_", "--tol", "-1"}).code == kExitUsage);
    CHECK(run_args({"poly", "--graph6", "!!"}).code == kExitUsage);
    CHECK(run_args({"nonsense"}).code == kExitUsage);
    CHECK(run_args({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(run_args({"verify", "--suite", "bounds", "--max-n", "9"}).code == kExitUsage);
    CHECK(run_args({"poly", "--family", "cycle", "--n", "70"}).code == kExitResource);
    CHECK(run_args({"poly", "--family", "path", "--n", "100"}).code == kExitResource);
  }

  TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"roots", "--family", "cycle", "--n", "7", "--output", "json"};
    CHECK(run_args(args).out == run_args(args).out);
  }
}
