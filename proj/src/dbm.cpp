#include "tazone/dbm.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tazone {

DistanceGraph::DistanceGraph(std::size_t clocks)
    : dim_(clocks + 1), weights_(dim_ * dim_, Weight::infinity()) {
  for (ClockIndex i = 0; i < dim_; ++i) {
    weights_[i * dim_ + i] = Weight::zero();
    weights_[i * dim_] = Weight::zero();  // 0 - x <= 0
  }
}

DistanceGraph DistanceGraph::zero(std::size_t clocks) {
  DistanceGraph g(clocks);
  std::fill(g.weights_.begin(), g.weights_.end(), Weight::zero());
  return g;
}

DistanceGraph DistanceGraph::empty(std::size_t clocks) {
  DistanceGraph g(clocks);
  g.empty_ = true;
  g.canonical_ = true;
  return g;
}

Weight DistanceGraph::at(ClockIndex i, ClockIndex j) const {
  if (i >= dim_ || j >= dim_)
    throw std::out_of_range("distance graph index out of range");
  return (*this)(i, j);
}

void DistanceGraph::set(ClockIndex i, ClockIndex j, Weight w) {
  if (i >= dim_ || j >= dim_)
    throw std::out_of_range("distance graph index out of range");
  if (empty_)
    return;
  weights_[i * dim_ + j] = w;
  canonical_ = false;
}

void DistanceGraph::tighten(ClockIndex i, ClockIndex j, Weight w) {
  if (i >= dim_ || j >= dim_)
    throw std::out_of_range("distance graph index out of range");
  if (empty_)
    return;
  auto& entry = weights_[i * dim_ + j];
  if (w < entry) {
    entry = w;
    canonical_ = false;
  }
}

bool operator==(const DistanceGraph& a, const DistanceGraph& b) noexcept {
  if (a.dim_ != b.dim_)
    return false;
  if (a.empty_ || b.empty_)
    return a.empty_ == b.empty_;
  return std::equal(a.weights_.begin(), a.weights_.end(), b.weights_.begin());
}

DistanceGraph canonicalize(DistanceGraph g) {
  if (g.empty_ || g.canonical_)
    return g;
  const std::size_t n = g.dim_;
  auto* w = g.weights_.data();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight ik = w[i * n + k];
      if (ik.is_infinite())
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Weight kj = w[k * n + j];
        if (kj.is_infinite())
          continue;
        const Weight through = ik + kj;
        if (through < w[i * n + j])
          w[i * n + j] = through;
      }
      if (w[i * n + i] < Weight::zero())
        return DistanceGraph::empty(n - 1);
    }
  }
  g.canonical_ = true;
  return g;
}

bool is_empty(const DistanceGraph& g) {
  if (g.is_empty_marker())
    return true;
  if (g.is_canonical())
    return false;
  return canonicalize(g).is_empty_marker();
}

DistanceGraph intersect_min(const DistanceGraph& a, const DistanceGraph& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("intersect_min: dimension mismatch");
  if (a.is_empty_marker())
    return a;
  if (b.is_empty_marker())
    return b;
  DistanceGraph result = a;
  for (ClockIndex i = 0; i < a.dimension(); ++i)
    for (ClockIndex j = 0; j < a.dimension(); ++j)
      result.set(i, j, min(a(i, j), b(i, j)));
  return result;
}

DistanceGraph constrain(const DistanceGraph& g, const Guard& guard) {
  if (g.is_empty_marker())
    return g;
  DistanceGraph result = g;
  for (const auto& atom : guard.atoms) {
    if (atom.clock == kZeroClock || atom.clock > g.clock_count())
      throw std::out_of_range("guard refers to unknown clock " + std::to_string(atom.clock));
    if (atom.constant < 0)
      throw std::invalid_argument("guard constant must be non-negative");
    const ClockIndex x = atom.clock;
    switch (atom.op) {
      case Comparison::kLess: result.tighten(0, x, Weight::strict(atom.constant)); break;
      case Comparison::kLessEqual: result.tighten(0, x, Weight::weak(atom.constant)); break;
      case Comparison::kEqual:
        result.tighten(0, x, Weight::weak(atom.constant));
        result.tighten(x, 0, Weight::weak(-atom.constant));
        break;
      case Comparison::kGreaterEqual: result.tighten(x, 0, Weight::weak(-atom.constant)); break;
      case Comparison::kGreater: result.tighten(x, 0, Weight::strict(-atom.constant)); break;
    }
  }
  return canonicalize(std::move(result));
}

DistanceGraph reset(const DistanceGraph& g, std::span<const ClockIndex> clocks) {
  if (g.is_empty_marker())
    throw std::invalid_argument("reset of an empty zone");
  if (!g.is_canonical())
    throw std::invalid_argument("reset requires a canonical zone");
  DistanceGraph result = g;
  const std::size_t n = g.dimension();
  for (ClockIndex x : clocks) {
    if (x == kZeroClock || x >= n)
      throw std::out_of_range("reset of unknown clock " + std::to_string(x));
    for (ClockIndex j = 0; j < n; ++j) {
      result.set(x, j, result(0, j));
      result.set(j, x, result(j, 0));
    }
    result.set(x, x, Weight::zero());
  }
  // Copying row/column 0 onto a reset clock preserves shortest-path closure.
  result.canonical_ = true;
  return result;
}

DistanceGraph time_elapse(const DistanceGraph& g) {
  if (g.is_empty_marker())
    throw std::invalid_argument("time elapse of an empty zone");
  if (!g.is_canonical())
    throw std::invalid_argument("time elapse requires a canonical zone");
  DistanceGraph result = g;
  for (ClockIndex x = 1; x < g.dimension(); ++x)
    result.set(0, x, Weight::infinity());
  // Dropping upper bounds of a closed graph leaves it closed.
  result.canonical_ = true;
  return result;
}

bool zone_includes(const DistanceGraph& z, const DistanceGraph& zp) {
  if (z.dimension() != zp.dimension())
    throw std::invalid_argument("zone_includes: dimension mismatch");
  if (z.is_empty_marker())
    return true;
  if (zp.is_empty_marker())
    return false;
  for (ClockIndex i = 0; i < z.dimension(); ++i)
    for (ClockIndex j = 0; j < z.dimension(); ++j)
      if (zp(i, j) < z(i, j))
        return false;
  return true;
}

namespace {

// v(j) - v(i) rel c, with v in units of 1/v.denominator() and c in units of 1/scale.
bool satisfies_all(const DistanceGraph& g, std::int64_t scale, const Valuation& v) {
  if (g.is_empty_marker())
    return false;
  if (v.clock_count() != g.clock_count())
    throw std::invalid_argument("valuation and zone have different clock counts");
  const std::int64_t denominator = v.denominator();
  for (ClockIndex i = 0; i < g.dimension(); ++i) {
    for (ClockIndex j = 0; j < g.dimension(); ++j) {
      const Weight w = g(i, j);
      if (w.is_infinite())
        continue;
      const std::int64_t lhs = (v.numerator(j) - v.numerator(i)) * scale;
      const std::int64_t rhs = w.value() * denominator;
      if (w.is_strict() ? !(lhs < rhs) : !(lhs <= rhs))
        return false;
    }
  }
  return true;
}

}  // namespace

bool contains_valuation(const DistanceGraph& g, const Valuation& v) { return satisfies_all(g, 1, v); }

bool contains_valuation(const ScaledZone& zone, const Valuation& v) {
  return satisfies_all(zone.graph, zone.scale, v);
}

DistanceGraph scaled(const DistanceGraph& g, std::int64_t factor) {
  if (factor <= 0)
    throw std::invalid_argument("scale factor must be positive");
  if (g.is_empty_marker() || factor == 1)
    return g;
  DistanceGraph result = g;
  for (ClockIndex i = 0; i < g.dimension(); ++i)
    for (ClockIndex j = 0; j < g.dimension(); ++j) {
      const Weight w = g(i, j);
      if (w.is_finite())
        result.set(i, j, Weight(w.relation(), w.value() * factor));
    }
  // Scaling is an order isomorphism on weights, so closure is preserved.
  result.canonical_ = g.is_canonical();
  return result;
}

std::string to_string(const DistanceGraph& g, const std::vector<std::string>& names) {
  auto name = [&](ClockIndex i) -> std::string {
    if (i == 0)
      return "0";
    return i <= names.size() ? names[i - 1] : "x" + std::to_string(i);
  };
  if (g.is_empty_marker())
    return "empty\n";
  std::size_t width = 8;
  for (ClockIndex i = 0; i < g.dimension(); ++i) {
    width = std::max(width, name(i).size() + 1);
    for (ClockIndex j = 0; j < g.dimension(); ++j)
      width = std::max(width, to_string(g(i, j)).size() + 1);
  }
  std::ostringstream os;
  os << std::setw(static_cast<int>(width)) << "";
  for (ClockIndex j = 0; j < g.dimension(); ++j)
    os << std::setw(static_cast<int>(width)) << name(j);
  os << '\n';
  for (ClockIndex i = 0; i < g.dimension(); ++i) {
    os << std::setw(static_cast<int>(width)) << name(i);
    for (ClockIndex j = 0; j < g.dimension(); ++j)
      os << std::setw(static_cast<int>(width)) << to_string(g(i, j));
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DistanceGraph& g) { return os << to_string(g); }

}  // namespace tazone
