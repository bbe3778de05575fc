#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpcheck {

// Exit codes of the analyze command; other commands use 0/1 and kExitError.
inline constexpr int kExitAllTrue = 0;
inline constexpr int kExitSomeFalse = 1;
inline constexpr int kExitSomeUnknown = 2;
inline constexpr int kExitError = 3;

/// Runs the command line `args` (program name first) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpcheck
