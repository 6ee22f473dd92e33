#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superdim {

/// Exit codes of the command-line driver.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs one command.  `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdim
