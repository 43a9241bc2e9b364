#ifndef RELGW_CLI_HPP
#define RELGW_CLI_HPP

#include <iosfwd>

namespace relgw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `relgw` tool; writes results to `out` and diagnostics
/// to `err`, and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace relgw::cli

#endif
