// Brute-force machinery for tests: replayable random zones, grid valuations,
// exact sample points, random automata and a region-graph reachability
// checker.  Nothing here is used by the library proper.

#ifndef TAZONE_ORACLES_HPP
#define TAZONE_ORACLES_HPP

#include "tazone/automaton.hpp"
#include "tazone/dbm.hpp"
#include "tazone/explorer.hpp"
#include "tazone/regions.hpp"
#include "tazone/valuation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tazone::oracles {

struct RecipeStep {
  enum class Kind : std::uint8_t { kConstrain, kReset, kElapse };
  Kind kind = Kind::kElapse;
  Guard guard;
  std::vector<ClockIndex> resets;
};

/// Operations applied to the zero point, in order.
struct ZoneRecipe {
  std::uint64_t seed = 0;
  std::size_t clocks = 0;
  std::vector<RecipeStep> steps;
};

ZoneRecipe random_recipe(std::uint64_t seed, std::size_t clocks, std::int64_t max_constant, std::size_t max_steps = 6);

/// The zone the recipe builds; the empty marker when a constraint empties it.
DistanceGraph replay(const ZoneRecipe& recipe);

/// `count` pairwise distinct nonempty zones from consecutive seeds.  With
/// `time_elapsed`, every recipe ends with an elapse step.
std::vector<DistanceGraph> zone_corpus(std::size_t clocks, std::int64_t max_constant, std::size_t count,
                                       std::uint64_t seed, bool time_elapsed = false);

/// Every map with L_x, U_x in {-inf, 0, ..., max_constant}.
std::vector<LuBounds> all_lu_maps(std::size_t clocks, std::int64_t max_constant);

/// All valuations with coordinates k / denominator in [0, max_coordinate].
std::vector<Valuation> grid_points(std::size_t clocks, std::int64_t denominator, std::int64_t max_coordinate,
                                   std::size_t limit = 1'000'000);

/// The grid points of `z` at denominator 2(n+1) with coordinates up to
/// max(alpha) + 1.  Throws ResourceLimitExceeded beyond `limit` candidates.
std::vector<Valuation> grid_valuations(const DistanceGraph& z, const BoundFunction& alpha,
                                       std::size_t limit = 1'000'000);

/// Some valuation in the canonical nonempty zone `z`.
Valuation pick_valuation(const DistanceGraph& z);

/// One valuation of `z` in each alpha-region meeting `z`.
std::vector<Valuation> region_samples(const DistanceGraph& z, const BoundFunction& alpha,
                                      std::size_t limit = 100000);

/// True iff every point is in a<=LU(Zp) by the membership oracle.
bool all_members(const std::vector<Valuation>& points, const DistanceGraph& zp, const LuBounds& lu);

/// Exists d >= 0 with vp + d in r_LU(v), by sampling d at every integer
/// crossing up to max(L, U) + 1, the midpoints between them and one delay past
/// the last crossing.
bool rlu_after_some_delay(const Valuation& v, const Valuation& vp, const LuBounds& lu);

struct AutomatonShape {
  std::size_t max_states = 4;
  std::size_t clocks = 2;
  std::int64_t max_constant = 3;
  std::size_t max_transitions = 6;
};

Automaton random_automaton(std::uint64_t seed, const AutomatonShape& shape = {});

/// Reachability on the region graph for the per-clock maximal guard constant.
Verdict region_graph_reachability(const Automaton& a, std::size_t limit = 1'000'000);
/// Same, for a given bound function, which must dominate every guard constant.
Verdict region_graph_reachability(const Automaton& a, const BoundFunction& alpha, std::size_t limit = 1'000'000);

struct OracleCheckReport {
  std::uint64_t pairs = 0;
  std::uint64_t disagreements = 0;
  /// The first disagreement, zones printed in full.
  std::string counterexample;
};

/// Random zone pairs and LU maps; alu_includes against all_members over
/// region samples of Z.
OracleCheckReport run_oracle_check(std::uint64_t seed, std::size_t clocks, std::size_t iterations);

}  // namespace tazone::oracles

#endif  // TAZONE_ORACLES_HPP
