#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spotted::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

/// Environment variable consulted for the default `qi-cert --jobs`.
inline constexpr const char* kJobsEnv = "SPOTTED_JOBS";

/// Runs one command line (args exclude the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spotted::cli
