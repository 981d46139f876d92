#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktrees::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kInternalError = 3,
};

// Runs the command line `args` (program name excluded), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktrees::cli
