#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrmult::cli {

/// Exit statuses shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // failed validation/check, or a reported error
inline constexpr int kExitUsage = 2;        // bad flags or arguments

/// Runs one CLI invocation; `args` excludes the program name. Errors are
/// written to `err` as a single line "error: <code>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrmult::cli
