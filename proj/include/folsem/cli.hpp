#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace folsem {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitAnswers = 0,
  kExitFailure = 1,
  kExitError = 2,
  kExitMalformed = 3,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace folsem
