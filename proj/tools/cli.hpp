#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyaut::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUnknown = 2,
  kInputError = 3,
};

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyaut::cli
