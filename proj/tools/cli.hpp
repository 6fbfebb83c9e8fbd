#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropsolve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success or a solvable verdict, 1 on a negative verdict, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropsolve::cli
