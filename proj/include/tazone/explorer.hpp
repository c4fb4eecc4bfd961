// Forward reachability over the zone graph with pluggable subsumption.

#ifndef TAZONE_EXPLORER_HPP
#define TAZONE_EXPLORER_HPP

#include "tazone/automaton.hpp"
#include "tazone/dbm.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tazone {

enum class InclusionMode : std::uint8_t { kNone, kSubset, kAlu };
enum class SearchOrder : std::uint8_t { kBfs, kDfs };
enum class Verdict : std::uint8_t { kReachable, kUnreachable };

struct ExplorationOptions {
  InclusionMode inclusion = InclusionMode::kAlu;
  SearchOrder order = SearchOrder::kBfs;
  bool trace = false;
  /// Maximum number of popped nodes before giving up.
  std::size_t node_budget = 1'000'000;
};

struct ExplorationStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_subsumed = 0;
  std::uint64_t inclusion_tests = 0;
  std::uint64_t max_waiting = 0;
};

/// One step source --transition--> target; `transition` indexes Automaton::transitions().
struct TraceStep {
  StateId source = 0;
  std::size_t transition = 0;
  StateId target = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ReachabilityResult {
  Verdict verdict = Verdict::kUnreachable;
  std::optional<std::vector<TraceStep>> trace;
  ExplorationStats stats;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(ExplorationStats stats)
      : std::runtime_error("node budget exhausted after " + std::to_string(stats.nodes_visited) + " nodes"),
        stats_(stats) {}
  const ExplorationStats& stats() const noexcept { return stats_; }

 private:
  ExplorationStats stats_;
};

/// subsumes(Z, Zp): the stored zone Zp covers the new zone Z.
using SubsumptionTest = std::function<bool(const DistanceGraph& z, const DistanceGraph& zp)>;

SubsumptionTest make_subsumption(InclusionMode mode, const LuBounds& lu);

/// Uses make_subsumption(options.inclusion, compute_lu_bounds(a)).
ReachabilityResult reachability(const Automaton& a, const ExplorationOptions& options = {});
ReachabilityResult reachability(const Automaton& a, const ExplorationOptions& options, const SubsumptionTest& subsumes);

/// "verdict=R visited=3 subsumed=1 tests=2".
std::string stats_line(const ReachabilityResult& result);

}  // namespace tazone

#endif  // TAZONE_EXPLORER_HPP
