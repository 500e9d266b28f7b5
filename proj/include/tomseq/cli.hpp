#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tomseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs the command line (args[0] is the program name) and returns the exit
/// code. Nothing is written to the real stdout/stderr except via out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tomseq::cli
