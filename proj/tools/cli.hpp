#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqsig::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kBoundViolation = 3,
  kSelftestFailure = 4,
};

/// Runs the command line `args` (without the program name). A FILE argument of
/// "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Same, reading "-" from std::cin.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqsig::cli
