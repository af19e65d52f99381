#ifndef POLYSUM_CLI_HPP
#define POLYSUM_CLI_HPP

#include "polysum/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polysum::cli {

enum class Verb { Roots, Orbit, Mult, Polytope, Expand, Matrix, Verify, Examples };

struct Command {
  Verb verb = Verb::Roots;
  AlgebraId algebra;
  std::optional<Weight> weight;
  std::optional<Int> max_level;
  std::optional<int> class_index;
  std::optional<std::string> order_file;
  /// examples: which worked example set to print.
  std::string example;
  bool inverse = false;
  bool json = false;
};

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs an already-validated command.
Result run(const Command& cmd);

/// Parses arguments (without the program name) and runs them.
Result run(const std::vector<std::string>& args);

}  // namespace polysum::cli

#endif  // POLYSUM_CLI_HPP
