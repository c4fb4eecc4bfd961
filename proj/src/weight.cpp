#include "tazone/weight.hpp"

#include <ostream>

namespace tazone {

std::string to_string(Weight w) {
  if (w.is_infinite())
    return "(<,inf)";
  return std::string(w.is_strict() ? "(<," : "(<=,") + std::to_string(w.value()) + ")";
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << to_string(w); }

std::string to_string(LuConstant c) { return c.is_finite() ? std::to_string(c.value()) : "-inf"; }

}  // namespace tazone
