#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramanujan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramanujan::cli
