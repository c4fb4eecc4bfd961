#include "tazone/explorer.hpp"

#include "tazone/alu.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <sstream>

namespace tazone {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct SearchNode {
  SymbolicState symbolic;
  std::size_t parent = kNoParent;
  std::size_t via = 0;
};

std::vector<TraceStep> trace_to(const Automaton& a, const std::vector<SearchNode>& nodes, std::size_t index) {
  std::vector<TraceStep> steps;
  for (std::size_t k = index; nodes[k].parent != kNoParent; k = nodes[k].parent) {
    const auto& t = a.transitions()[nodes[k].via];
    steps.push_back({t.source, nodes[k].via, t.target});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

SubsumptionTest make_subsumption(InclusionMode mode, const LuBounds& lu) {
  switch (mode) {
    case InclusionMode::kNone:
      return [](const DistanceGraph& z, const DistanceGraph& zp) { return z == zp; };
    case InclusionMode::kSubset:
      return [](const DistanceGraph& z, const DistanceGraph& zp) { return zone_includes(z, zp); };
    case InclusionMode::kAlu:
      return [lu](const DistanceGraph& z, const DistanceGraph& zp) { return alu_includes(z, zp, lu); };
  }
  throw std::invalid_argument("unknown inclusion mode");
}

ReachabilityResult reachability(const Automaton& a, const ExplorationOptions& options) {
  return reachability(a, options, make_subsumption(options.inclusion, compute_lu_bounds(a)));
}

ReachabilityResult reachability(const Automaton& a, const ExplorationOptions& options, const SubsumptionTest& subsumes) {
  ReachabilityResult result;
  ExplorationStats& stats = result.stats;
  std::vector<SearchNode> nodes;
  std::vector<std::vector<std::size_t>> stored(a.states().size());
  std::deque<std::size_t> waiting;

  nodes.push_back({initial_node(a), kNoParent, 0});
  waiting.push_back(0);

  while (!waiting.empty()) {
    stats.max_waiting = std::max<std::uint64_t>(stats.max_waiting, waiting.size());
    std::size_t current;
    if (options.order == SearchOrder::kBfs) {
      current = waiting.front();
      waiting.pop_front();
    } else {
      current = waiting.back();
      waiting.pop_back();
    }
    if (stats.nodes_visited >= options.node_budget)
      throw BudgetExceeded(stats);
    ++stats.nodes_visited;

    const SymbolicState& node = nodes[current].symbolic;
    assert(node.zone.is_canonical() && !node.zone.is_empty_marker());
    if (a.is_accepting(node.state)) {
      result.verdict = Verdict::kReachable;
      if (options.trace)
        result.trace = trace_to(a, nodes, current);
      return result;
    }

    bool covered = false;
    for (std::size_t k : stored[node.state]) {
      ++stats.inclusion_tests;
      if (subsumes(node.zone, nodes[k].symbolic.zone)) {
        covered = true;
        break;
      }
    }
    if (covered) {
      ++stats.nodes_subsumed;
      continue;
    }
    stored[node.state].push_back(current);

    const auto& outgoing = a.outgoing(node.state);
    std::vector<std::size_t> fresh;
    for (std::size_t t : outgoing) {
      auto next = successor(a, nodes[current].symbolic, a.transitions()[t]);
      if (!next)
        continue;
      nodes.push_back({std::move(*next), current, t});
      fresh.push_back(nodes.size() - 1);
    }
    // DFS pops from the back, so push in reverse to expand in declaration order.
    if (options.order == SearchOrder::kDfs)
      std::reverse(fresh.begin(), fresh.end());
    waiting.insert(waiting.end(), fresh.begin(), fresh.end());
  }
  result.verdict = Verdict::kUnreachable;
  return result;
}

std::string stats_line(const ReachabilityResult& result) {
  std::ostringstream os;
  os << "verdict=" << (result.verdict == Verdict::kReachable ? 'R' : 'U') << " visited=" << result.stats.nodes_visited
     << " subsumed=" << result.stats.nodes_subsumed << " tests=" << result.stats.inclusion_tests;
  return os.str();
}

}  // namespace tazone
