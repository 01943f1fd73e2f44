#pragma once

#include <string>
#include <vector>

namespace skein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// Runs one command line (argv[0] is the program name). Writes JSON to
/// stdout or the --out file.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace skein::cli
