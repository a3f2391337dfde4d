#ifndef HORNSP_CLI_HPP_
#define HORNSP_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hornsp/combinatorics.hpp"
#include "hornsp/core.hpp"

namespace hornsp::cli {

/// Environment variable naming the inequality cache directory.
inline constexpr const char* kCacheEnv = "HORNSP_CACHE_DIR";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kNegative = 1, kInvalid = 2 };

/// Parses "1,0.5,0.25"; a leading '@' reads the list from that file instead.
RealVector parse_tuple(std::string_view text);

/// Inequality list for (n, minimal), read from or written to the cache when
/// one is available. Cache problems are reported on `err` and otherwise ignored.
std::vector<HornInequality> cached_inequalities(int n, bool minimal, bool allow_large_n,
                                                std::ostream& err);

/// Runs the command line `args` (args[0] is the program name). JSON goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornsp::cli

#endif  // HORNSP_CLI_HPP_
