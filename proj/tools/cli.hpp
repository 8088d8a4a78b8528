#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvf::cli {

/// Exit codes: 0 success, 1 input or system error, 2 infeasible guiding set.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs `gvf <check|fit|harmonic|mw|gen> [options]`. `args` excludes the
/// program name. Summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvf::cli
