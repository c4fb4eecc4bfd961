#include "tazone/cli.hpp"

#include "tazone/explorer.hpp"
#include "tazone/model_io.hpp"
#include "tazone/oracles.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace tazone {

namespace {

struct CheckArgs {
  std::string file;
  std::string inclusion = "alu";
  std::string order = "bfs";
  bool trace = false;
  bool stats = false;
  std::size_t budget = 1'000'000;
  std::string expect;
};

struct OracleArgs {
  std::uint64_t seed = 20240601;
  std::size_t clocks = 2;
  std::size_t iterations = 2000;
};

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const Automaton a = load_model(args.file);
  ExplorationOptions options;
  options.inclusion = args.inclusion == "none"     ? InclusionMode::kNone
                      : args.inclusion == "subset" ? InclusionMode::kSubset
                                                   : InclusionMode::kAlu;
  options.order = args.order == "dfs" ? SearchOrder::kDfs : SearchOrder::kBfs;
  options.trace = args.trace;
  options.node_budget = args.budget;
  ReachabilityResult result;
  try {
    result = reachability(a, options);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  const bool reachable = result.verdict == Verdict::kReachable;
  out << (reachable ? "REACHABLE" : "UNREACHABLE") << '\n';
  if (args.stats)
    out << stats_line(result) << '\n';
  if (args.trace && result.trace) {
    for (const auto& step : *result.trace)
      out << a.states()[step.source] << " --transition#" << step.transition << "--> " << a.states()[step.target]
          << '\n';
  }
  if (!args.expect.empty() && (args.expect == "reachable") != reachable)
    return kExitMismatch;
  return kExitOk;
}

int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const auto report = oracles::run_oracle_check(args.seed, args.clocks, args.iterations);
  out << "pairs=" << report.pairs << " disagreements=" << report.disagreements << '\n';
  if (report.disagreements) {
    err << "counterexample:\n" << report.counterexample;
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timed automata reachability with the a<=LU abstraction", "tazone"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide reachability of an accepting state");
  check_cmd->add_option("file", check.file, "Model in .ta format")->required();
  check_cmd->add_option("--inclusion", check.inclusion, "Subsumption test")
      ->transform(CLI::IsMember({"none", "subset", "alu"}, CLI::ignore_case));
  check_cmd->add_option("--search", check.order, "Search order")
      ->transform(CLI::IsMember({"bfs", "dfs"}, CLI::ignore_case));
  check_cmd->add_flag("--trace", check.trace, "Print a path to the accepting state");
  check_cmd->add_flag("--stats", check.stats, "Print exploration statistics");
  check_cmd->add_option("--budget", check.budget, "Maximum number of visited nodes")->check(CLI::PositiveNumber);
  check_cmd->add_option("--expect", check.expect, "Expected verdict")
      ->check(CLI::IsMember({"reachable", "unreachable"}));

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the inclusion test with a brute-force oracle");
  oracle_cmd->group("");
  oracle_cmd->add_option("--seed", oracle.seed, "Random seed");
  oracle_cmd->add_option("--clocks", oracle.clocks, "Number of clocks")->check(CLI::Range(1, 4));
  oracle_cmd->add_option("--iters", oracle.iterations, "Number of zone pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed())
      return run_check(check, out, err);
    return run_oracle(oracle, out, err);
  } catch (const ParseError& e) {
    err << check.file << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tazone
