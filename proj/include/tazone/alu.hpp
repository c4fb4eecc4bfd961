// The a<=LU abstraction: clock partitions of a region, the distance graph of
// the inverse abstraction, the two-clock emptiness characterization, the least
// region weight over a zone, and the quadratic test Z subset a<=LU(Z').

#ifndef TAZONE_ALU_HPP
#define TAZONE_ALU_HPP

#include "tazone/automaton.hpp"
#include "tazone/dbm.hpp"
#include "tazone/regions.hpp"
#include "tazone/valuation.hpp"
#include "tazone/weight.hpp"

#include <cstdint>
#include <vector>

namespace tazone {

/// B: upper bound of the region at most min(L, U); L: between L and U;
/// U: between U and L; M: above both.
enum class ClockClass : std::uint8_t { kB, kL, kU, kM };

struct ClockPartition {
  /// Indexed by ClockIndex; the reference clock is always kB.
  std::vector<ClockClass> classes;

  ClockClass operator[](ClockIndex x) const { return classes.at(x); }
  bool in_b_or_l(ClockIndex x) const { return classes[x] == ClockClass::kB || classes[x] == ClockClass::kL; }
  bool in_b_or_u(ClockIndex x) const { return classes[x] == ClockClass::kB || classes[x] == ClockClass::kU; }
  bool in_l_or_m(ClockIndex x) const { return classes[x] == ClockClass::kL || classes[x] == ClockClass::kM; }
  bool in_u_or_m(ClockIndex x) const { return classes[x] == ClockClass::kU || classes[x] == ClockClass::kM; }
};

ClockPartition partition_clocks(const RegionDescriptor& r, const LuBounds& lu);

/// Distance graph of { vp : exists v in R, v <=LU vp }.  Not canonical.
DistanceGraph alu_inverse_graph(const RegionDescriptor& r, const LuBounds& lu);

/// R subset a<=LU(Zp), decided pairwise on the canonical graphs of R and Zp.
bool region_in_alu(const RegionDescriptor& r, const DistanceGraph& zp, const LuBounds& lu);

/// Least value of the y -> x edge among the alpha-regions meeting Z; (<=,0)
/// when x = y.
Weight min_region_weight(const DistanceGraph& z, ClockIndex x, ClockIndex y, const BoundFunction& alpha);

/// Z subset a<=LU(Zp) for canonical nonempty Z and Zp, in O(n^2).  When
/// `comparisons` is given, the number of weight comparisons performed is added
/// to it.
bool alu_includes(const DistanceGraph& z, const DistanceGraph& zp, const LuBounds& lu,
                  std::uint64_t* comparisons = nullptr);

/// v in a<=LU(Zp), straight from the definition: the up-set box of v meets Zp.
bool alu_member_oracle(const Valuation& v, const DistanceGraph& zp, const LuBounds& lu);

}  // namespace tazone

#endif  // TAZONE_ALU_HPP
