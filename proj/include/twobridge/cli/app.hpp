#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twobridge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInternalError = 3,
};

/// Runs the command line (arguments without the program name). The document
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
