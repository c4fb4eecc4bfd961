// Exact clock valuations.

#ifndef TAZONE_VALUATION_HPP
#define TAZONE_VALUATION_HPP

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tazone {

using Rational = boost::rational<std::int64_t>;

/// Index of a clock in a distance graph.  Index 0 is the reference clock that
/// is constantly 0; automaton clocks are 1..n in declaration order.
using ClockIndex = std::size_t;
inline constexpr ClockIndex kZeroClock = 0;

/// A valuation of clocks 1..n with non-negative rational values, stored as
/// integer numerators over one shared positive denominator.  The denominator
/// is not necessarily reduced; equality compares the denoted values.
class Valuation {
 public:
  Valuation() = default;

  /// `numerators[i]` is the numerator of clock i + 1.
  Valuation(std::vector<std::int64_t> numerators, std::int64_t denominator);

  static Valuation zero(std::size_t clocks) { return Valuation(std::vector<std::int64_t>(clocks, 0), 1); }
  static Valuation from_integers(std::initializer_list<std::int64_t> values) { return Valuation(values, 1); }
  static Valuation from_rationals(std::span<const Rational> values);
  static Valuation from_rationals(std::initializer_list<Rational> values) {
    return from_rationals(std::span<const Rational>(values.begin(), values.size()));
  }

  std::size_t clock_count() const noexcept { return numerators_.size(); }
  std::int64_t denominator() const noexcept { return denominator_; }

  /// Numerator of clock x over denominator(); 0 for the reference clock.
  std::int64_t numerator(ClockIndex x) const noexcept { return x == kZeroClock ? 0 : numerators_[x - 1]; }

  Rational operator[](ClockIndex x) const { return Rational(numerator(x), denominator_); }

  std::int64_t integer_part(ClockIndex x) const noexcept { return numerator(x) / denominator_; }
  /// Fractional part of clock x, scaled by denominator().
  std::int64_t fractional_numerator(ClockIndex x) const noexcept { return numerator(x) % denominator_; }
  bool is_integer(ClockIndex x) const noexcept { return fractional_numerator(x) == 0; }

  /// Three-way comparison of v(x) with an integer.
  int compare(ClockIndex x, std::int64_t c) const noexcept {
    const std::int64_t rhs = c * denominator_;
    const std::int64_t lhs = numerator(x);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  /// Compares v(x) with w(x) exactly.
  static int compare(const Valuation& v, const Valuation& w, ClockIndex x) noexcept {
    const std::int64_t lhs = v.numerator(x) * w.denominator_;
    const std::int64_t rhs = w.numerator(x) * v.denominator_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  /// v + delta, delta >= 0.
  Valuation delayed(Rational delta) const;
  /// [R]v: clocks in `clocks` set to 0.
  Valuation with_reset(std::span<const ClockIndex> clocks) const;
  /// Same values over a denominator that is a multiple of the current one.
  Valuation rescaled(std::int64_t denominator) const;

  friend bool operator==(const Valuation& a, const Valuation& b) noexcept;

 private:
  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_ = 1;
};

/// "(x1=1/2, x2=3)" style rendering with default clock names.
std::string to_string(const Valuation& v);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace tazone

#endif  // TAZONE_VALUATION_HPP
