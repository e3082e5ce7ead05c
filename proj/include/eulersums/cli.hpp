#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 evaluation-domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersums::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// args[0] is the program name. Records go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersums::cli
