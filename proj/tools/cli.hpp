#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mindeg::cli {

// Process exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kSemanticFailure = 1;  // invalid ordering, reduction disagreement, violated bound
inline constexpr int kUsageError = 2;       // bad flags or configuration
inline constexpr int kParseError = 3;       // unreadable or malformed files

/// Runs one `mindeg` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mindeg::cli
