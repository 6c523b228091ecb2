#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spantree::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapExceeded = 3;

// Runs one command line (args excludes the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spantree::cli
