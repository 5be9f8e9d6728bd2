#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simson::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Subcommands: construct, verify, fuzz, audit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simson::cli
