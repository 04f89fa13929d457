#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wban::cli {

/// Exit status: 0 success, 1 validation error, 2 resource-cap refusal.
enum ExitCode : int { kOk = 0, kInvalid = 1, kCapRefused = 2 };

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wban::cli
