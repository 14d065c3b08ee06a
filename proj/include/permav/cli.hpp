#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permav::cli {

// Exit codes are part of the contract: 0 success, 1 comparison mismatch,
// 2 usage error, 3 class not regular (without --force), 4 resource guard.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotRegular = 3;
inline constexpr int kExitGuard = 4;

/// Run one CLI invocation (argv without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permav::cli
