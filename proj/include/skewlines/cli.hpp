#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlines::cli {

/// Process exit codes shared by every subcommand.
enum ExitStatus : int {
  kHolds = 0,
  kViolation = 1,
  kInvalidInput = 2,
  kNoConvergence = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON results go to
/// `out`, human-readable summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewlines::cli
