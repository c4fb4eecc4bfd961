// Diagonal-free clock constraints: conjunctions of atoms `x # c` with c a
// natural number.

#ifndef TAZONE_CONSTRAINT_HPP
#define TAZONE_CONSTRAINT_HPP

#include "tazone/valuation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tazone {

enum class Comparison : std::uint8_t { kLess, kLessEqual, kEqual, kGreaterEqual, kGreater };

struct ClockConstraint {
  ClockIndex clock = 1;
  Comparison op = Comparison::kLessEqual;
  std::int64_t constant = 0;

  friend bool operator==(const ClockConstraint&, const ClockConstraint&) = default;
};

/// Conjunction of atoms; no atoms means `true`.
struct Guard {
  std::vector<ClockConstraint> atoms;

  bool is_true() const noexcept { return atoms.empty(); }
  friend bool operator==(const Guard&, const Guard&) = default;
};

bool is_lower_bound(Comparison op) noexcept;
bool is_upper_bound(Comparison op) noexcept;

bool satisfies(const Valuation& v, const ClockConstraint& atom) noexcept;
bool satisfies(const Valuation& v, const Guard& guard) noexcept;

const char* to_string(Comparison op) noexcept;

/// "x1<=3 && x2>1" with default names, "true" for the empty guard.
std::string to_string(const Guard& guard, const std::vector<std::string>& clock_names = {});

}  // namespace tazone

#endif  // TAZONE_CONSTRAINT_HPP
