#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, malformed input or enumeration limit exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace steenrod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steenrod::cli
