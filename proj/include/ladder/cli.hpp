#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ladder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Ladder input comes
/// from --in files or, when absent, from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ladder::cli
