#ifndef ILRC_TOOLS_CLI_HPP
#define ILRC_TOOLS_CLI_HPP

#include <iosfwd>

namespace ilrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDecodeFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `ilrc` command line; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ilrc::cli

#endif  // ILRC_TOOLS_CLI_HPP
