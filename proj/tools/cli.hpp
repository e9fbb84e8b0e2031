#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kings::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // a semantic "no": continuity violation, verification failure
inline constexpr int kUsage = 2;     // bad flags or bad input files

/// Runs `kingsel` with args (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kings::cli
