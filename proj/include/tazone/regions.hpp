// Regions with respect to a bound function, and the LU-simulation apparatus
// built on valuations: the LU preorder, LU-regions, and the guard sequence
// whose executability characterizes LU-simulation.

#ifndef TAZONE_REGIONS_HPP
#define TAZONE_REGIONS_HPP

#include "tazone/automaton.hpp"
#include "tazone/constraint.hpp"
#include "tazone/dbm.hpp"
#include "tazone/valuation.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tazone {

/// alpha_x for every clock; alpha[0] = 0 for the reference clock.
struct BoundFunction {
  std::vector<std::int64_t> alpha;

  /// alpha_x = max(L_x, U_x, 0).
  static BoundFunction from_lu(const LuBounds& lu);
  static BoundFunction uniform(std::size_t clocks, std::int64_t bound);

  std::size_t clock_count() const noexcept { return alpha.size() - 1; }
  std::int64_t max_constant() const noexcept;
};

enum class IntervalKind : std::uint8_t {
  kExact,  // x = c
  kOpen,   // c - 1 < x < c
  kAbove,  // x > c, with c = alpha_x
};

struct ClockTag {
  IntervalKind kind = IntervalKind::kExact;
  std::int64_t constant = 0;

  friend auto operator<=>(const ClockTag&, const ClockTag&) = default;
};

/// One region: a tag per clock plus the order of fractional parts of the
/// clocks tagged kOpen, as blocks of equal fractional part listed in
/// increasing order.
class RegionDescriptor {
 public:
  /// `tags[i]` is the tag of clock i + 1.  Throws std::invalid_argument when
  /// the blocks do not partition the kOpen clocks.
  RegionDescriptor(std::vector<ClockTag> tags, std::vector<std::vector<ClockIndex>> fractional_blocks);

  std::size_t clock_count() const noexcept { return tags_.size(); }
  const ClockTag& tag(ClockIndex x) const { return tags_.at(x - 1); }
  const std::vector<std::vector<ClockIndex>>& fractional_blocks() const noexcept { return blocks_; }

  friend auto operator<=>(const RegionDescriptor&, const RegionDescriptor&) = default;

 private:
  std::vector<ClockTag> tags_;
  std::vector<std::vector<ClockIndex>> blocks_;
};

/// "x=1; y in (0,1); frac: [y]".
std::string to_string(const RegionDescriptor& r, const std::vector<std::string>& names = {});

class ResourceLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

RegionDescriptor region_of(const Valuation& v, const BoundFunction& alpha);

/// The canonical distance graph denoting exactly the region.
DistanceGraph region_to_dbm(const RegionDescriptor& r);

/// A valuation inside the region.
Valuation representative(const RegionDescriptor& r);

/// Every region for `alpha`, in a fixed order.  Throws ResourceLimitExceeded
/// when the number of regions may exceed `limit`.
std::vector<RegionDescriptor> enumerate_regions(const BoundFunction& alpha, std::size_t limit = 100000);

/// The regions for `alpha` that intersect the canonical nonempty zone `z`.
std::vector<RegionDescriptor> enumerate_regions_intersecting(const DistanceGraph& z, const BoundFunction& alpha,
                                                             std::size_t limit = 100000);

/// v <=_LU vp: per clock, vp(x) < v(x) implies vp(x) > L_x and vp(x) > v(x)
/// implies v(x) > U_x.  Comparisons with -inf hold vacuously.
bool lu_preorder(const Valuation& v, const Valuation& vp, const LuBounds& lu);

/// { vp : v <=_LU vp }, a box with corners at v's coordinates.
ScaledZone up_set_box(const Valuation& v, const LuBounds& lu);

/// vp in r_LU(v): every LU-guard satisfied by v is satisfied by vp, and the
/// fractional order of v is kept on the LU-relevant pairs.
bool rlu_contains(const Valuation& v, const Valuation& vp, const LuBounds& lu);

/// Reset-free transitions given only by their guards.
struct GuardSequence {
  std::vector<Guard> guards;
};

/// seq(v): the tightest satisfied LU thresholds of v, followed by one guard per
/// clock y with v(y) <= L_y in decreasing order of fractional part.
GuardSequence build_test_sequence(const Valuation& v, const LuBounds& lu);

/// True iff delays 0 <= d_0 <= d_1 <= ... exist with vp + d_i satisfying the
/// i-th guard.
bool executable_from(const Valuation& vp, const GuardSequence& seq);

}  // namespace tazone

#endif  // TAZONE_REGIONS_HPP
