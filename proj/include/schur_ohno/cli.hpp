#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schur_ohno::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verify-duality: some point failed
  kUsage = 2,
  kInadmissible = 3,
  kUnsupportedDual = 4,
  kConvergence = 5,
};

/// Runs one command line (args[0] is the program name). Normal output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur_ohno::cli
