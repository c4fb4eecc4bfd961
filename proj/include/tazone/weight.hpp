// Bounds (<, c) / (<=, c) and their arithmetic.
//
// A weight is the atom of every zone computation: an edge x -> y of weight
// (rel, c) in a distance graph encodes the constraint y - x rel c.  The only
// infinite weight is (<, inf).
//
// Weights are packed as 2c + (weak ? 1 : 0), which makes the order on weights
// the plain integer order on the packed form and keeps min/compare branch-free.

#ifndef TAZONE_WEIGHT_HPP
#define TAZONE_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace tazone {

enum class Relation : std::uint8_t { kStrict, kWeak };

/// Raised when a weight or bound computation leaves the representable range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class Weight {
 public:
  /// Largest magnitude of a finite weight constant.
  static constexpr std::int64_t kMaxValue = std::int64_t{1} << 60;

  /// (<=, 0), the additive identity.
  constexpr Weight() noexcept : raw_(1) {}

  /// Throws ArithmeticOverflow when |value| > kMaxValue.
  constexpr Weight(Relation relation, std::int64_t value) : raw_(0) {
    if (value > kMaxValue || value < -kMaxValue)
      throw ArithmeticOverflow("weight constant out of range: " + std::to_string(value));
    raw_ = value * 2 + (relation == Relation::kWeak ? 1 : 0);
  }

  static constexpr Weight strict(std::int64_t value) { return Weight(Relation::kStrict, value); }
  static constexpr Weight weak(std::int64_t value) { return Weight(Relation::kWeak, value); }
  static constexpr Weight infinity() noexcept { return from_raw(kInfinityRaw); }
  static constexpr Weight zero() noexcept { return Weight(); }

  constexpr bool is_infinite() const noexcept { return raw_ == kInfinityRaw; }
  constexpr bool is_finite() const noexcept { return raw_ != kInfinityRaw; }
  constexpr bool is_strict() const noexcept { return (raw_ & 1) == 0; }
  constexpr Relation relation() const noexcept { return is_strict() ? Relation::kStrict : Relation::kWeak; }

  /// Constant of a finite weight.  Undefined for (<, inf).
  constexpr std::int64_t value() const noexcept { return raw_ >> 1; }

  constexpr std::int64_t raw() const noexcept { return raw_; }

  friend constexpr bool operator==(Weight, Weight) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) noexcept { return a.raw_ <=> b.raw_; }

 private:
  static constexpr std::int64_t kInfinityRaw = std::numeric_limits<std::int64_t>::max() - 1;

  static constexpr Weight from_raw(std::int64_t raw) noexcept {
    Weight w;
    w.raw_ = raw;
    return w;
  }

  std::int64_t raw_;
};

/// (r1, c1) + (r2, c2) = (r, c1 + c2) with r strict iff either operand is.
/// (<, inf) absorbs everything.
constexpr Weight operator+(Weight a, Weight b) {
  if (a.is_infinite() || b.is_infinite())
    return Weight::infinity();
  const auto rel = (a.is_strict() || b.is_strict()) ? Relation::kStrict : Relation::kWeak;
  return Weight(rel, a.value() + b.value());
}

/// -(r, c) = (r, -c).  Negating (<, inf) is a logic error.
constexpr Weight operator-(Weight a) {
  if (a.is_infinite())
    throw std::domain_error("cannot negate (<,inf)");
  return Weight(a.relation(), -a.value());
}

/// Ceiling on integer constants: (<=, c) stays, (<, c) becomes (<, c + 1).
/// The ceiling of (<, inf) is (<, inf).
constexpr Weight ceil(Weight a) {
  if (a.is_infinite() || !a.is_strict())
    return a;
  return Weight::strict(a.value() + 1);
}

constexpr Weight min(Weight a, Weight b) noexcept { return b < a ? b : a; }
constexpr Weight max(Weight a, Weight b) noexcept { return a < b ? b : a; }

/// "(<,5)", "(<=,5)", "(<,inf)".
std::string to_string(Weight w);
std::ostream& operator<<(std::ostream& os, Weight w);

/// A per-clock LU bound: a non-negative integer, or -inf when the clock never
/// occurs in a guard of the corresponding kind.
class LuConstant {
 public:
  constexpr LuConstant() noexcept = default;  // -inf

  static constexpr LuConstant minus_infinity() noexcept { return LuConstant(); }
  static constexpr LuConstant finite(std::int64_t value) {
    if (value < 0)
      throw std::invalid_argument("LU bound must be non-negative: " + std::to_string(value));
    if (value > Weight::kMaxValue)
      throw ArithmeticOverflow("LU bound out of range: " + std::to_string(value));
    LuConstant c;
    c.value_ = value;
    return c;
  }

  constexpr bool is_finite() const noexcept { return value_ >= 0; }
  constexpr bool is_minus_infinity() const noexcept { return value_ < 0; }

  /// Finite value.  Undefined for -inf.
  constexpr std::int64_t value() const noexcept { return value_; }

  /// Finite value, or `fallback` for -inf.
  constexpr std::int64_t value_or(std::int64_t fallback) const noexcept { return is_finite() ? value_ : fallback; }

  friend constexpr bool operator==(LuConstant, LuConstant) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(LuConstant a, LuConstant b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  std::int64_t value_ = -1;
};

constexpr LuConstant max(LuConstant a, LuConstant b) noexcept { return a < b ? b : a; }

std::string to_string(LuConstant c);

}  // namespace tazone

#endif  // TAZONE_WEIGHT_HPP
