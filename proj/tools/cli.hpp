#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nefslope::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kPreconditionViolation = 3,
  kWitnessFound = 10,
};

/// Runs one command line (args excludes the program name). JSON goes to out
/// (or --output), the human summary and diagnostics to err. width_env is the
/// value of NEFSLOPE_WIDTH, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& width_env = std::nullopt);

}  // namespace nefslope::cli
