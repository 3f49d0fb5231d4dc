#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoholo::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNonUnitary = 3,
  kVerificationFailed = 4,
  kOpenLoop = 5,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoholo::cli
