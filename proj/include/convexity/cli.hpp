#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace convexity {

/// Exit codes of convexity_lab.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitInputError = 2, kExitCapacityError = 3 };

/// Runs `convexity_lab <args...>` (program name excluded), writing results to
/// `out` (or the --output file) and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexity
