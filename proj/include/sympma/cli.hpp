#pragma once

// Command-line front end. Reports are ordered key/value records printed
// as indented text or, with --json, as JSON.
//
// Exit codes: 0 success, 2 rejected input, 3 inconclusive sampling.

#include <iosfwd>
#include <string>
#include <vector>

namespace sma {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitInconclusive = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sma
