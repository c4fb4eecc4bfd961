#include "tazone/valuation.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tazone {

Valuation::Valuation(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ <= 0)
    throw std::invalid_argument("valuation denominator must be positive");
  for (auto n : numerators_)
    if (n < 0)
      throw std::invalid_argument("clock values must be non-negative");
}

Valuation Valuation::from_rationals(std::span<const Rational> values) {
  std::int64_t denominator = 1;
  for (const auto& r : values)
    denominator = boost::integer::lcm(denominator, r.denominator());
  std::vector<std::int64_t> numerators;
  numerators.reserve(values.size());
  for (const auto& r : values)
    numerators.push_back(r.numerator() * (denominator / r.denominator()));
  return Valuation(std::move(numerators), denominator);
}

Valuation Valuation::delayed(Rational delta) const {
  if (delta < 0)
    throw std::invalid_argument("negative delay");
  const std::int64_t denominator = boost::integer::lcm(denominator_, delta.denominator());
  Valuation result = rescaled(denominator);
  const std::int64_t shift = delta.numerator() * (denominator / delta.denominator());
  for (auto& n : result.numerators_)
    n += shift;
  return result;
}

Valuation Valuation::with_reset(std::span<const ClockIndex> clocks) const {
  Valuation result = *this;
  for (ClockIndex x : clocks) {
    if (x == kZeroClock || x > numerators_.size())
      throw std::out_of_range("reset of unknown clock " + std::to_string(x));
    result.numerators_[x - 1] = 0;
  }
  return result;
}

Valuation Valuation::rescaled(std::int64_t denominator) const {
  if (denominator <= 0 || denominator % denominator_ != 0)
    throw std::invalid_argument("rescaled: new denominator must be a multiple of the old one");
  const std::int64_t factor = denominator / denominator_;
  Valuation result = *this;
  result.denominator_ = denominator;
  for (auto& n : result.numerators_)
    n *= factor;
  return result;
}

bool operator==(const Valuation& a, const Valuation& b) noexcept {
  if (a.clock_count() != b.clock_count())
    return false;
  for (std::size_t i = 0; i < a.numerators_.size(); ++i)
    if (a.numerators_[i] * b.denominator_ != b.numerators_[i] * a.denominator_)
      return false;
  return true;
}

std::string to_string(const Valuation& v) {
  std::ostringstream os;
  os << '(';
  for (ClockIndex x = 1; x <= v.clock_count(); ++x) {
    if (x > 1)
      os << ", ";
    const Rational r = v[x];
    os << 'x' << x << '=' << r.numerator();
    if (r.denominator() != 1)
      os << '/' << r.denominator();
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << to_string(v); }

}  // namespace tazone
