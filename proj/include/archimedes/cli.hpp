#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace archimedes {

// Exit codes: 0 satisfied/pass, 1 violated, 2 hypothesis violated, 64 usage
// or configuration error.
inline constexpr int kExitSatisfied = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitHypothesisViolated = 2;
inline constexpr int kExitUsage = 64;

// Full command line front end; args excludes argv[0]. Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archimedes
