#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtcode::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kCheckFailed = 2; ///< decode failure or a failed check

/// Runs the tool on `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vtcode::cli
