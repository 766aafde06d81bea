#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hmix/multigraph.hpp"

namespace hmix::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Invariant battery behind `hmix verify`; returns one line per failed check.
std::vector<std::string> invariant_failures(const MixedMultigraph& m);

} // namespace hmix::cli
