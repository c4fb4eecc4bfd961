#include "tazone/automaton.hpp"

#include <set>
#include <sstream>

namespace tazone {

Automaton::Automaton(std::vector<std::string> states, StateId initial, std::vector<StateId> accepting,
                     std::vector<std::string> clocks, std::vector<Transition> transitions)
    : states_(std::move(states)),
      initial_(initial),
      accepting_(states_.size(), false),
      clocks_(std::move(clocks)),
      transitions_(std::move(transitions)),
      outgoing_(states_.size()) {
  if (states_.empty())
    throw InvalidAutomaton("automaton has no states");
  if (initial_ >= states_.size())
    throw InvalidAutomaton("initial state out of range");
  std::set<std::string> names(states_.begin(), states_.end());
  if (names.size() != states_.size())
    throw InvalidAutomaton("duplicate state name");
  std::set<std::string> clock_names(clocks_.begin(), clocks_.end());
  if (clock_names.size() != clocks_.size())
    throw InvalidAutomaton("duplicate clock name");
  for (StateId q : accepting) {
    if (q >= states_.size())
      throw InvalidAutomaton("accepting state out of range");
    accepting_[q] = true;
  }
  for (std::size_t k = 0; k < transitions_.size(); ++k) {
    const auto& t = transitions_[k];
    if (t.source >= states_.size() || t.target >= states_.size())
      throw InvalidAutomaton("transition " + std::to_string(k) + " refers to an unknown state");
    for (const auto& atom : t.guard.atoms) {
      if (atom.clock == kZeroClock || atom.clock > clocks_.size())
        throw InvalidAutomaton("transition " + std::to_string(k) + " guards an unknown clock");
      if (atom.constant < 0)
        throw InvalidAutomaton("transition " + std::to_string(k) + " has a negative guard constant");
    }
    for (ClockIndex x : t.resets)
      if (x == kZeroClock || x > clocks_.size())
        throw InvalidAutomaton("transition " + std::to_string(k) + " resets an unknown clock");
    outgoing_[t.source].push_back(k);
  }
}

std::vector<StateId> Automaton::accepting_states() const {
  std::vector<StateId> result;
  for (StateId q = 0; q < accepting_.size(); ++q)
    if (accepting_[q])
      result.push_back(q);
  return result;
}

LuBounds LuBounds::unbounded(std::size_t clocks) {
  LuBounds lu{std::vector<LuConstant>(clocks + 1), std::vector<LuConstant>(clocks + 1)};
  lu.lower[0] = lu.upper[0] = LuConstant::finite(0);
  return lu;
}

LuBounds LuBounds::uniform(std::size_t clocks, std::int64_t bound) {
  LuBounds lu = unbounded(clocks);
  for (ClockIndex x = 1; x <= clocks; ++x)
    lu.lower[x] = lu.upper[x] = LuConstant::finite(bound);
  return lu;
}

LuBounds compute_lu_bounds(const Automaton& a) {
  LuBounds lu = LuBounds::unbounded(a.clock_count());
  for (const auto& t : a.transitions()) {
    for (const auto& atom : t.guard.atoms) {
      const auto c = LuConstant::finite(atom.constant);
      if (is_lower_bound(atom.op))
        lu.lower[atom.clock] = max(lu.lower[atom.clock], c);
      if (is_upper_bound(atom.op))
        lu.upper[atom.clock] = max(lu.upper[atom.clock], c);
    }
  }
  return lu;
}

std::string to_string(const LuBounds& lu) {
  std::ostringstream os;
  os << "L=(";
  for (ClockIndex x = 1; x < lu.lower.size(); ++x)
    os << (x > 1 ? "," : "") << to_string(lu.lower[x]);
  os << ") U=(";
  for (ClockIndex x = 1; x < lu.upper.size(); ++x)
    os << (x > 1 ? "," : "") << to_string(lu.upper[x]);
  os << ")";
  return os.str();
}

SymbolicState initial_node(const Automaton& a) {
  return {a.initial(), time_elapse(DistanceGraph::zero(a.clock_count()))};
}

std::optional<SymbolicState> successor(const Automaton& a, const SymbolicState& node, const Transition& t) {
  if (t.source != node.state)
    throw std::invalid_argument("transition does not leave the node's state");
  if (node.zone.clock_count() != a.clock_count())
    throw std::invalid_argument("zone dimension does not match the automaton");
  DistanceGraph guarded = constrain(node.zone, t.guard);
  if (guarded.is_empty_marker())
    return std::nullopt;
  return SymbolicState{t.target, time_elapse(reset(guarded, t.resets))};
}

}  // namespace tazone
