#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pancake {

/// Process exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
  kExitNumeric = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Cap defaults
/// can be overridden through PANCAKE_VERTEX_CAP, PANCAKE_DENSE_CAP and
/// PANCAKE_EXACT_CAP; explicit flags take precedence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pancake
