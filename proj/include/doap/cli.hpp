#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doap::cli {

/// Exit codes shared by every subcommand. `decide` maps its verdict onto
/// Ok/Infeasible; `verify` returns Infeasible when any trial disagrees.
enum ExitCode : int { Ok = 0, Infeasible = 1, Error = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doap::cli
