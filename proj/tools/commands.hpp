#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catscore::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kNumericalError = 3,
};

/// Runs the command line (args[0] is the program name). Output files are
/// written where --out points; "-" or no --out writes to `out`. Diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catscore::cli
