#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resil::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kBudgetError = 3 };

/// Runs the command line `args` (without the program name). The
/// deterministic report goes to `out`; diagnostics and wall time go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resil::cli
