#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcpoly/limits.hpp"

namespace wcpoly {

enum class Command { Poly, Corona, Transform, Roots, Gen, Verify, Search, Filter };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  Command command = Command::Poly;

  // Graph sources; at most one of these is set.
  std::optional<std::string> input;   // path, or "-" for stdin
  std::optional<std::string> graph6;
  std::optional<std::string> family;
  std::vector<int> sizes;             // --n, or --parts for multipartite

  std::optional<std::string> coefficients;  // transform / roots
  std::optional<int> order;
  std::optional<int> alpha;
  bool inverse = false;

  std::string format = "graph6";  // graph6 | edgelist
  std::string output = "text";    // text | json
  double tol = 1e-9;
  int jobs = 1;
  int max_n = 7;

  std::string suite;
  std::string mode;
  int max_tree_order = 14;
  std::optional<std::string> evidence;

  bool well_covered = false;  // filter
  bool connected = false;     // filter

  Limits limits;

  /// Throws UsageError.
  void validate() const;
};

/// Executes one command. Returns an ExitCode.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err, std::istream& in);

/// Parses argv-style arguments (without the program name) and runs them.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                     std::istream& in);

}  // namespace wcpoly
