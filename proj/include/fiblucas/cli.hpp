#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiblucas::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;       // verification failure or fixture mismatch
inline constexpr int kUsage = 2;
inline constexpr int kUnavailable = 3;  // OEIS data could not be obtained

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiblucas::cli
