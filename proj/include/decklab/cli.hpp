#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decklab {

inline constexpr const char* kToolName = "decklab";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit statuses of `run_cli`.
enum ExitCode : int
{
    kExitOk = 0,
    kExitInputError = 1,
    kExitFalsified = 2,
};

/// Runs the command line `args` (args[0] is the program name), writing the
/// report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace decklab
