#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zalcman {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitBoundViolation = 3,
};

/// Parses `args` (without the program name), runs one subcommand and writes its
/// report to `out` (or to --out). Diagnostics go to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" (inclusive) or a single integer.
std::vector<int> parse_n_range(const std::string& text);

/// Parses a comma-separated list of reals.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace zalcman
