#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hombax {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitHolds = 0, kExitFails = 1, kExitUsage = 2 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`, a
/// one-line human summary (or the usage error) to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hombax
