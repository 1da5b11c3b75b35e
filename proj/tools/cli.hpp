#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace avoidance::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kConstructionFailed = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoidance::cli
