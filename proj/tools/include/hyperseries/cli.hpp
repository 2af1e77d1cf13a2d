#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperseries::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

// Runs one command line (without the program name), e.g.
// {"count", "--n", "3", "--profile", "u2=2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperseries::cli
