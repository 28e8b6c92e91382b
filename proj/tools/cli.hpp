#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hofstadter::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoFailure = 1,
  kUsage = 2,
  kVerificationFailed = 3,
  kDegenerateBand = 4,
};

/// Runs one command line (args excludes the program name). Machine-readable
/// output goes to `out`; diagnostics and the render summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hofstadter::cli
