#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperstrength::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kRefused = 2 };

struct RunConfig {
  std::string subcommand;
  std::string input = "-";
  std::string output;  // empty: standard output
  double epsilon = 0.1;
  double d = 2.0;
  std::uint64_t seed = 0;
  std::string mode = "approx";
  std::int64_t k = 1;
  bool verify = false;
  bool approx = false;
  bool window_debug = false;
  bool json = false;
  std::size_t threads = 1;
  std::optional<std::size_t> oracle_limit;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Parses argv-style arguments (without the program name) and runs the
/// subcommand. Reports go to out, diagnostics to err prefixed "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hyperstrength::cli
