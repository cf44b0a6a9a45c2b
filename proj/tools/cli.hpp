#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupprox::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      ///< malformed flags or invalid configuration
  kFileError = 3,  ///< unreadable, unwritable or unparsable files
  kDimension = 4,  ///< inputs with inconsistent sizes
  kInternal = 1,
};

/// Runs the tool on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupprox::cli
