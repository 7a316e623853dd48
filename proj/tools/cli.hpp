#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcw::cli {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 positive verdict (or success), 1 negative verdict,
/// 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcw::cli
