#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zomat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kPreconditionViolated = 2,
  kCounterexample = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace zomat::cli
