#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cslab::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNotPositive = 2;    // positivity --expect positive got "no"; conjecture counterexample
inline constexpr int kUnknownAtCap = 3;
inline constexpr int kVerifyFailed = 4;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cslab::cli
