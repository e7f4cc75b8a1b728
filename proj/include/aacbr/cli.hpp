#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aacbr::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;  // `check` found counterexamples
inline constexpr int kParseError = 2;  // bad flags or unreadable input
inline constexpr int kIncoherent = 3;  // cumulative engine on incoherent data

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aacbr::cli
