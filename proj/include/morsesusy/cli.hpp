#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsesusy {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadParams = 2 };

/// Runs the command line `args` (args[0] is the program name). Tables go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.15g", the format of every number the tool prints.
std::string format_number(double x);

}  // namespace morsesusy
