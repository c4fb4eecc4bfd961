#include "tazone/constraint.hpp"

namespace tazone {

bool is_lower_bound(Comparison op) noexcept {
  return op == Comparison::kGreater || op == Comparison::kGreaterEqual || op == Comparison::kEqual;
}

bool is_upper_bound(Comparison op) noexcept {
  return op == Comparison::kLess || op == Comparison::kLessEqual || op == Comparison::kEqual;
}

bool satisfies(const Valuation& v, const ClockConstraint& atom) noexcept {
  const int cmp = v.compare(atom.clock, atom.constant);
  switch (atom.op) {
    case Comparison::kLess: return cmp < 0;
    case Comparison::kLessEqual: return cmp <= 0;
    case Comparison::kEqual: return cmp == 0;
    case Comparison::kGreaterEqual: return cmp >= 0;
    case Comparison::kGreater: return cmp > 0;
  }
  return false;
}

bool satisfies(const Valuation& v, const Guard& guard) noexcept {
  for (const auto& atom : guard.atoms)
    if (!satisfies(v, atom))
      return false;
  return true;
}

const char* to_string(Comparison op) noexcept {
  switch (op) {
    case Comparison::kLess: return "<";
    case Comparison::kLessEqual: return "<=";
    case Comparison::kEqual: return "==";
    case Comparison::kGreaterEqual: return ">=";
    case Comparison::kGreater: return ">";
  }
  return "?";
}

std::string to_string(const Guard& guard, const std::vector<std::string>& clock_names) {
  if (guard.is_true())
    return "true";
  std::string out;
  for (const auto& atom : guard.atoms) {
    if (!out.empty())
      out += " && ";
    out += atom.clock <= clock_names.size() ? clock_names[atom.clock - 1] : "x" + std::to_string(atom.clock);
    out += to_string(atom.op);
    out += std::to_string(atom.constant);
  }
  return out;
}

}  // namespace tazone
