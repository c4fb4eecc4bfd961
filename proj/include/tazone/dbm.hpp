// Distance graphs (difference bound matrices) over clocks 0..n.
//
// Entry (i, j) is the weight of the edge i -> j and encodes v(j) - v(i) rel c.
// Row 0 holds upper bounds (entry(0, x) bounds x from above), column 0 holds
// negated lower bounds (entry(x, 0) = (rel, -c) means x rel' c from below).
//
// A graph is either a matrix (canonical or not) or the distinguished empty
// marker produced when canonicalization finds a negative cycle.  Operations
// taking an empty graph short-circuit.

#ifndef TAZONE_DBM_HPP
#define TAZONE_DBM_HPP

#include "tazone/constraint.hpp"
#include "tazone/valuation.hpp"
#include "tazone/weight.hpp"

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tazone {

class DistanceGraph {
 public:
  /// The unconstrained zone over `clocks` clocks (all clocks >= 0).
  explicit DistanceGraph(std::size_t clocks);

  static DistanceGraph universe(std::size_t clocks) { return DistanceGraph(clocks); }
  /// The single valuation where every clock is 0.
  static DistanceGraph zero(std::size_t clocks);
  static DistanceGraph empty(std::size_t clocks);

  std::size_t clock_count() const noexcept { return dim_ - 1; }
  std::size_t dimension() const noexcept { return dim_; }

  Weight operator()(ClockIndex i, ClockIndex j) const noexcept { return weights_[i * dim_ + j]; }
  Weight at(ClockIndex i, ClockIndex j) const;

  /// Overwrites one edge; the graph is no longer considered canonical.
  void set(ClockIndex i, ClockIndex j, Weight w);
  /// Lowers one edge to min(current, w).
  void tighten(ClockIndex i, ClockIndex j, Weight w);

  bool is_canonical() const noexcept { return canonical_; }
  bool is_empty_marker() const noexcept { return empty_; }

  friend bool operator==(const DistanceGraph& a, const DistanceGraph& b) noexcept;

 private:
  friend DistanceGraph canonicalize(DistanceGraph g);
  friend DistanceGraph reset(const DistanceGraph& g, std::span<const ClockIndex> clocks);
  friend DistanceGraph time_elapse(const DistanceGraph& g);
  friend DistanceGraph scaled(const DistanceGraph& g, std::int64_t factor);

  std::size_t dim_;
  boost::container::small_vector<Weight, 16> weights_;
  bool canonical_ = true;
  bool empty_ = false;
};

/// A zone whose constants are in units of 1/scale:
/// the denoted set is { v : scale * v in graph }.  Used by oracles whose
/// zones have rational corners.
struct ScaledZone {
  DistanceGraph graph;
  std::int64_t scale = 1;
};

/// Shortest-path closure (Floyd-Warshall over weights).  Returns the empty
/// marker if a negative cycle exists.
DistanceGraph canonicalize(DistanceGraph g);

/// True iff the graph has a cycle of weight at most (<, 0).
bool is_empty(const DistanceGraph& g);

/// Entrywise minimum; denotes the intersection.  Not canonical.
DistanceGraph intersect_min(const DistanceGraph& a, const DistanceGraph& b);

/// Intersection with a guard, canonicalized.
DistanceGraph constrain(const DistanceGraph& g, const Guard& guard);

/// { [R]v : v in g }.  `g` must be canonical and nonempty.
DistanceGraph reset(const DistanceGraph& g, std::span<const ClockIndex> clocks);

/// { v + d : v in g, d >= 0 }.  `g` must be canonical and nonempty.
DistanceGraph time_elapse(const DistanceGraph& g);

/// Z subset of Zp, for canonical Z and Zp.
bool zone_includes(const DistanceGraph& z, const DistanceGraph& zp);

bool contains_valuation(const DistanceGraph& g, const Valuation& v);
bool contains_valuation(const ScaledZone& zone, const Valuation& v);

/// Multiplies every finite constant by `factor` > 0.
DistanceGraph scaled(const DistanceGraph& g, std::int64_t factor);

/// Weight matrix with a header row and column of clock names, clock 0 first.
/// Empty `names` uses x1..xn.
std::string to_string(const DistanceGraph& g, const std::vector<std::string>& names = {});
std::ostream& operator<<(std::ostream& os, const DistanceGraph& g);

}  // namespace tazone

#endif  // TAZONE_DBM_HPP
