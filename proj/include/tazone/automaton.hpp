// Diagonal-free timed automata without state invariants, their LU bounds, and
// the symbolic successor on time-elapsed zones.

#ifndef TAZONE_AUTOMATON_HPP
#define TAZONE_AUTOMATON_HPP

#include "tazone/constraint.hpp"
#include "tazone/dbm.hpp"
#include "tazone/weight.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tazone {

using StateId = std::size_t;

struct Transition {
  StateId source = 0;
  Guard guard;
  std::vector<ClockIndex> resets;
  StateId target = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

class InvalidAutomaton : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A = (Q, q0, X, T, Acc).  Immutable once constructed; the constructor
/// validates every reference.
class Automaton {
 public:
  Automaton(std::vector<std::string> states, StateId initial, std::vector<StateId> accepting,
            std::vector<std::string> clocks, std::vector<Transition> transitions);

  const std::vector<std::string>& states() const noexcept { return states_; }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId q) const { return accepting_.at(q); }
  std::vector<StateId> accepting_states() const;
  /// Clock i + 1 is named clocks()[i].
  const std::vector<std::string>& clocks() const noexcept { return clocks_; }
  std::size_t clock_count() const noexcept { return clocks_.size(); }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  /// Indices into transitions() of the transitions leaving q, in declaration order.
  const std::vector<std::size_t>& outgoing(StateId q) const { return outgoing_.at(q); }

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  std::vector<std::string> states_;
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<std::string> clocks_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

/// Per-clock maxima of lower-bound (L) and upper-bound (U) guard constants.
/// Both vectors are indexed by ClockIndex; the reference clock has L = U = 0.
struct LuBounds {
  std::vector<LuConstant> lower;
  std::vector<LuConstant> upper;

  /// All clocks at -inf (reference clock at 0).
  static LuBounds unbounded(std::size_t clocks);
  /// L_x = U_x = bound for every clock.
  static LuBounds uniform(std::size_t clocks, std::int64_t bound);

  std::size_t clock_count() const noexcept { return lower.size() - 1; }
  friend bool operator==(const LuBounds&, const LuBounds&) = default;
};

LuBounds compute_lu_bounds(const Automaton& a);

std::string to_string(const LuBounds& lu);

/// A control state paired with a canonical zone.
struct SymbolicState {
  StateId state = 0;
  DistanceGraph zone{0};
};

/// (q0, elapse(zero)).
SymbolicState initial_node(const Automaton& a);

/// elapse([R](Z and g)) at t.target, or nothing when Z and g is empty.
std::optional<SymbolicState> successor(const Automaton& a, const SymbolicState& node, const Transition& t);

}  // namespace tazone

#endif  // TAZONE_AUTOMATON_HPP
