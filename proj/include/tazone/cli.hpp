// Command-line front end.
//
//   check <file.ta> [--inclusion none|subset|alu] [--search bfs|dfs]
//                   [--trace] [--stats] [--budget N] [--expect reachable|unreachable]
//   oracle-check [--seed S] [--clocks N] [--iters K]
//
// Exit codes: 0 success, 1 --expect mismatch or oracle disagreement,
// 2 parse or usage error, 3 node budget exhausted.

#ifndef TAZONE_CLI_HPP
#define TAZONE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tazone {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tazone

#endif  // TAZONE_CLI_HPP
