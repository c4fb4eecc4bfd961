#include "tazone/regions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace tazone {

BoundFunction BoundFunction::from_lu(const LuBounds& lu) {
  BoundFunction f;
  f.alpha.assign(lu.lower.size(), 0);
  for (ClockIndex x = 1; x < lu.lower.size(); ++x)
    f.alpha[x] = std::max({lu.lower[x].value_or(0), lu.upper[x].value_or(0), std::int64_t{0}});
  return f;
}

BoundFunction BoundFunction::uniform(std::size_t clocks, std::int64_t bound) {
  if (bound < 0)
    throw std::invalid_argument("bound function must be non-negative");
  BoundFunction f;
  f.alpha.assign(clocks + 1, bound);
  f.alpha[0] = 0;
  return f;
}

std::int64_t BoundFunction::max_constant() const noexcept {
  return alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
}

RegionDescriptor::RegionDescriptor(std::vector<ClockTag> tags, std::vector<std::vector<ClockIndex>> fractional_blocks)
    : tags_(std::move(tags)), blocks_(std::move(fractional_blocks)) {
  std::vector<int> seen(tags_.size() + 1, 0);
  for (const auto& block : blocks_) {
    if (block.empty())
      throw std::invalid_argument("empty fractional block");
    for (ClockIndex x : block) {
      if (x == kZeroClock || x > tags_.size() || tags_[x - 1].kind != IntervalKind::kOpen)
        throw std::invalid_argument("fractional block lists a clock without an open interval");
      if (seen[x]++)
        throw std::invalid_argument("clock listed twice in the fractional order");
    }
  }
  for (ClockIndex x = 1; x <= tags_.size(); ++x) {
    const auto& t = tags_[x - 1];
    if (t.kind == IntervalKind::kOpen && !seen[x])
      throw std::invalid_argument("open-interval clock missing from the fractional order");
    if ((t.kind == IntervalKind::kOpen && t.constant < 1) || t.constant < 0)
      throw std::invalid_argument("region tag constant out of range");
  }
}

std::string to_string(const RegionDescriptor& r, const std::vector<std::string>& names) {
  auto name = [&](ClockIndex x) { return x <= names.size() ? names[x - 1] : "x" + std::to_string(x); };
  std::ostringstream os;
  for (ClockIndex x = 1; x <= r.clock_count(); ++x) {
    const auto& t = r.tag(x);
    switch (t.kind) {
      case IntervalKind::kExact: os << name(x) << '=' << t.constant; break;
      case IntervalKind::kOpen: os << name(x) << " in (" << t.constant - 1 << ',' << t.constant << ')'; break;
      case IntervalKind::kAbove: os << name(x) << '>' << t.constant; break;
    }
    os << "; ";
  }
  os << "frac:";
  if (r.fractional_blocks().empty())
    os << " []";
  bool first_block = true;
  for (const auto& block : r.fractional_blocks()) {
    os << (first_block ? " [" : " < [");
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k)
      os << (k ? "," : "") << name(block[k]);
    os << ']';
  }
  return os.str();
}

RegionDescriptor region_of(const Valuation& v, const BoundFunction& alpha) {
  if (alpha.clock_count() != v.clock_count())
    throw std::invalid_argument("region_of: clock count mismatch");
  std::vector<ClockTag> tags;
  std::vector<ClockIndex> open;
  for (ClockIndex x = 1; x <= v.clock_count(); ++x) {
    if (v.compare(x, alpha.alpha[x]) > 0) {
      tags.push_back({IntervalKind::kAbove, alpha.alpha[x]});
    } else if (v.is_integer(x)) {
      tags.push_back({IntervalKind::kExact, v.integer_part(x)});
    } else {
      tags.push_back({IntervalKind::kOpen, v.integer_part(x) + 1});
      open.push_back(x);
    }
  }
  std::stable_sort(open.begin(), open.end(), [&](ClockIndex a, ClockIndex b) {
    return v.fractional_numerator(a) < v.fractional_numerator(b);
  });
  std::vector<std::vector<ClockIndex>> blocks;
  for (std::size_t k = 0; k < open.size(); ++k) {
    if (k == 0 || v.fractional_numerator(open[k]) != v.fractional_numerator(open[k - 1]))
      blocks.emplace_back();
    blocks.back().push_back(open[k]);
  }
  for (auto& block : blocks)
    std::sort(block.begin(), block.end());
  return RegionDescriptor(std::move(tags), std::move(blocks));
}

DistanceGraph region_to_dbm(const RegionDescriptor& r) {
  DistanceGraph g(r.clock_count());
  for (ClockIndex x = 1; x <= r.clock_count(); ++x) {
    const auto& t = r.tag(x);
    switch (t.kind) {
      case IntervalKind::kExact:
        g.set(0, x, Weight::weak(t.constant));
        g.set(x, 0, Weight::weak(-t.constant));
        break;
      case IntervalKind::kOpen:
        g.set(0, x, Weight::strict(t.constant));
        g.set(x, 0, Weight::strict(-(t.constant - 1)));
        break;
      case IntervalKind::kAbove: g.set(x, 0, Weight::strict(-t.constant)); break;
    }
  }
  // Integer parts of open clocks are constant - 1, so y - x is the difference
  // of integer parts plus the difference of fractional parts.
  const auto& blocks = r.fractional_blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (ClockIndex x : blocks[b]) {
      const std::int64_t fx = r.tag(x).constant - 1;
      for (std::size_t b2 = b; b2 < blocks.size(); ++b2) {
        for (ClockIndex y : blocks[b2]) {
          if (x == y)
            continue;
          const std::int64_t fy = r.tag(y).constant - 1;
          if (b == b2) {
            g.set(x, y, Weight::weak(fy - fx));
            g.set(y, x, Weight::weak(fx - fy));
          } else {
            g.set(x, y, Weight::strict(fy - fx + 1));
            g.set(y, x, Weight::strict(fx - fy));
          }
        }
      }
    }
  }
  return canonicalize(std::move(g));
}

Valuation representative(const RegionDescriptor& r) {
  const auto& blocks = r.fractional_blocks();
  const auto denominator = static_cast<std::int64_t>(blocks.size() + 1);
  std::vector<std::int64_t> numerators(r.clock_count(), 0);
  for (ClockIndex x = 1; x <= r.clock_count(); ++x) {
    const auto& t = r.tag(x);
    if (t.kind == IntervalKind::kExact)
      numerators[x - 1] = t.constant * denominator;
    else if (t.kind == IntervalKind::kAbove)
      numerators[x - 1] = (t.constant + 1) * denominator;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (ClockIndex x : blocks[b])
      numerators[x - 1] = (r.tag(x).constant - 1) * denominator + static_cast<std::int64_t>(b + 1);
  return Valuation(std::move(numerators), denominator);
}

namespace {

std::size_t ordered_partition_count(std::size_t n) {
  // Fubini numbers: a(n) = sum_k C(n, k) a(n - k).
  std::vector<std::size_t> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t binom = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

// All ordered partitions of `items` into nonempty blocks.
void ordered_partitions(const std::vector<ClockIndex>& items, std::vector<std::vector<std::vector<ClockIndex>>>& out) {
  const std::size_t m = items.size();
  std::vector<std::size_t> rank(m, 0);
  std::size_t combos = 1;
  for (std::size_t k = 0; k < m; ++k)
    combos *= m;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < m; ++k) {
      rank[m - 1 - k] = c % m;
      c /= m;
    }
    std::size_t used = 0;
    std::vector<bool> present(m, false);
    for (auto r : rank)
      present[r] = true;
    while (used < m && present[used])
      ++used;
    bool surjective_prefix = true;
    for (std::size_t r = used; r < m; ++r)
      if (present[r])
        surjective_prefix = false;
    if (!surjective_prefix)
      continue;
    std::vector<std::vector<ClockIndex>> blocks(used);
    for (std::size_t k = 0; k < m; ++k)
      blocks[rank[k]].push_back(items[k]);
    out.push_back(std::move(blocks));
  }
}

}  // namespace

std::vector<RegionDescriptor> enumerate_regions(const BoundFunction& alpha, std::size_t limit) {
  const std::size_t n = alpha.clock_count();
  double bound = static_cast<double>(ordered_partition_count(n));
  for (ClockIndex x = 1; x <= n; ++x)
    bound *= static_cast<double>(2 * alpha.alpha[x] + 2);
  if (bound > static_cast<double>(limit))
    throw ResourceLimitExceeded("region enumeration would exceed the limit of " + std::to_string(limit));

  std::vector<RegionDescriptor> result;
  std::vector<ClockTag> tags(n);
  auto recurse = [&](auto&& self, ClockIndex x) -> void {
    if (x > n) {
      std::vector<ClockIndex> open;
      for (ClockIndex y = 1; y <= n; ++y)
        if (tags[y - 1].kind == IntervalKind::kOpen)
          open.push_back(y);
      std::vector<std::vector<std::vector<ClockIndex>>> partitions;
      if (open.empty())
        partitions.emplace_back();
      else
        ordered_partitions(open, partitions);
      for (auto& blocks : partitions)
        result.emplace_back(tags, std::move(blocks));
      return;
    }
    const std::int64_t a = alpha.alpha[x];
    for (std::int64_t c = 0; c <= a; ++c) {
      if (c > 0) {
        tags[x - 1] = {IntervalKind::kOpen, c};
        self(self, x + 1);
      }
      tags[x - 1] = {IntervalKind::kExact, c};
      self(self, x + 1);
    }
    tags[x - 1] = {IntervalKind::kAbove, a};
    self(self, x + 1);
  };
  recurse(recurse, 1);
  return result;
}

std::vector<RegionDescriptor> enumerate_regions_intersecting(const DistanceGraph& z, const BoundFunction& alpha,
                                                             std::size_t limit) {
  if (z.clock_count() != alpha.clock_count())
    throw std::invalid_argument("enumerate_regions_intersecting: clock count mismatch");
  std::vector<RegionDescriptor> result;
  for (auto& r : enumerate_regions(alpha, limit))
    if (!is_empty(intersect_min(region_to_dbm(r), z)))
      result.push_back(std::move(r));
  return result;
}

bool lu_preorder(const Valuation& v, const Valuation& vp, const LuBounds& lu) {
  if (v.clock_count() != vp.clock_count() || lu.clock_count() != v.clock_count())
    throw std::invalid_argument("lu_preorder: clock count mismatch");
  for (ClockIndex x = 1; x <= v.clock_count(); ++x) {
    const int cmp = Valuation::compare(vp, v, x);
    if (cmp < 0 && lu.lower[x].is_finite() && vp.compare(x, lu.lower[x].value()) <= 0)
      return false;
    if (cmp > 0 && lu.upper[x].is_finite() && v.compare(x, lu.upper[x].value()) <= 0)
      return false;
  }
  return true;
}

ScaledZone up_set_box(const Valuation& v, const LuBounds& lu) {
  if (lu.clock_count() != v.clock_count())
    throw std::invalid_argument("up_set_box: clock count mismatch");
  const std::int64_t scale = v.denominator();
  DistanceGraph g(v.clock_count());
  for (ClockIndex x = 1; x <= v.clock_count(); ++x) {
    const LuConstant l = lu.lower[x];
    const LuConstant u = lu.upper[x];
    // May decrease, but only to values above L_x.
    if (l.is_finite() && v.compare(x, l.value()) <= 0)
      g.set(x, 0, Weight::weak(-v.numerator(x)));
    else if (l.is_finite())
      g.set(x, 0, Weight::strict(-l.value() * scale));
    // May increase only when v(x) is above U_x.
    if (u.is_finite() && v.compare(x, u.value()) <= 0)
      g.set(0, x, Weight::weak(v.numerator(x)));
  }
  return {canonicalize(std::move(g)), scale};
}

bool rlu_contains(const Valuation& v, const Valuation& vp, const LuBounds& lu) {
  if (v.clock_count() != vp.clock_count() || lu.clock_count() != v.clock_count())
    throw std::invalid_argument("rlu_contains: clock count mismatch");
  const std::size_t n = v.clock_count();
  for (ClockIndex x = 1; x <= n; ++x) {
    if (lu.lower[x].is_finite()) {
      for (std::int64_t c = 0; c <= lu.lower[x].value(); ++c) {
        const int a = v.compare(x, c), b = vp.compare(x, c);
        if ((a > 0 && b <= 0) || (a >= 0 && b < 0))
          return false;
      }
    }
    if (lu.upper[x].is_finite()) {
      for (std::int64_t c = 0; c <= lu.upper[x].value(); ++c) {
        const int a = v.compare(x, c), b = vp.compare(x, c);
        if ((a < 0 && b >= 0) || (a <= 0 && b > 0))
          return false;
      }
    }
  }
  for (ClockIndex x = 1; x <= n; ++x) {
    if (!lu.upper[x].is_finite() || v.compare(x, lu.upper[x].value()) > 0)
      continue;
    if (v.integer_part(x) != vp.integer_part(x))
      continue;
    for (ClockIndex y = 1; y <= n; ++y) {
      if (y == x || !lu.lower[y].is_finite() || v.compare(y, lu.lower[y].value()) > 0)
        continue;
      if (v.integer_part(y) != vp.integer_part(y))
        continue;
      const auto fx = v.fractional_numerator(x), fy = v.fractional_numerator(y);
      const auto gx = vp.fractional_numerator(x), gy = vp.fractional_numerator(y);
      if (fx < fy && !(gx < gy))
        return false;
      if (fx == fy && !(gx <= gy))
        return false;
    }
  }
  return true;
}

GuardSequence build_test_sequence(const Valuation& v, const LuBounds& lu) {
  if (lu.clock_count() != v.clock_count())
    throw std::invalid_argument("build_test_sequence: clock count mismatch");
  const std::size_t n = v.clock_count();
  GuardSequence seq;

  // g_int, stored as the tightest satisfied lower and upper LU threshold per clock.
  Guard g_int;
  for (ClockIndex x = 1; x <= n; ++x) {
    if (lu.lower[x].is_finite()) {
      const std::int64_t l = lu.lower[x].value();
      if (v.compare(x, l) > 0)
        g_int.atoms.push_back({x, Comparison::kGreater, l});
      else if (v.is_integer(x))
        g_int.atoms.push_back({x, Comparison::kGreaterEqual, v.integer_part(x)});
      else
        g_int.atoms.push_back({x, Comparison::kGreater, v.integer_part(x)});
    }
    if (lu.upper[x].is_finite() && v.compare(x, lu.upper[x].value()) <= 0) {
      if (v.is_integer(x))
        g_int.atoms.push_back({x, Comparison::kLessEqual, v.integer_part(x)});
      else
        g_int.atoms.push_back({x, Comparison::kLess, v.integer_part(x) + 1});
    }
  }
  seq.guards.push_back(std::move(g_int));

  std::vector<ClockIndex> lower_bounded;
  for (ClockIndex y = 1; y <= n; ++y)
    if (lu.lower[y].is_finite() && v.compare(y, lu.lower[y].value()) <= 0)
      lower_bounded.push_back(y);
  std::stable_sort(lower_bounded.begin(), lower_bounded.end(), [&](ClockIndex a, ClockIndex b) {
    return v.fractional_numerator(a) > v.fractional_numerator(b);
  });

  for (ClockIndex y : lower_bounded) {
    Guard g_y;
    for (ClockIndex x = 1; x <= n; ++x) {
      if (x == y || !lu.upper[x].is_finite() || v.compare(x, lu.upper[x].value()) > 0)
        continue;
      const auto fx = v.fractional_numerator(x), fy = v.fractional_numerator(y);
      if (fx < fy) {
        g_y.atoms.push_back({x, Comparison::kLess, v.integer_part(x) + 1});
        g_y.atoms.push_back({y, Comparison::kGreater, v.integer_part(y) + 1});
      } else if (fx == fy) {
        g_y.atoms.push_back({x, Comparison::kLessEqual, v.integer_part(x) + 1});
        g_y.atoms.push_back({y, Comparison::kGreaterEqual, v.integer_part(y) + 1});
      }
    }
    seq.guards.push_back(std::move(g_y));
  }
  return seq;
}

namespace {

struct DelayBound {
  Rational value;
  bool open = false;
};

}  // namespace

bool executable_from(const Valuation& vp, const GuardSequence& seq) {
  DelayBound earliest{Rational(0), false};
  for (const auto& guard : seq.guards) {
    DelayBound lo = earliest;
    std::optional<DelayBound> hi;
    auto raise = [&](Rational value, bool open) {
      if (value > lo.value || (value == lo.value && open))
        lo = {value, open};
    };
    auto lower_cap = [&](Rational value, bool open) {
      if (!hi || value < hi->value || (value == hi->value && open))
        hi = DelayBound{value, open};
    };
    for (const auto& atom : guard.atoms) {
      if (atom.clock == kZeroClock || atom.clock > vp.clock_count())
        throw std::out_of_range("guard refers to unknown clock");
      const Rational gap = Rational(atom.constant) - vp[atom.clock];
      switch (atom.op) {
        case Comparison::kLess: lower_cap(gap, true); break;
        case Comparison::kLessEqual: lower_cap(gap, false); break;
        case Comparison::kEqual:
          lower_cap(gap, false);
          raise(gap, false);
          break;
        case Comparison::kGreaterEqual: raise(gap, false); break;
        case Comparison::kGreater: raise(gap, true); break;
      }
    }
    if (hi && (hi->value < lo.value || (hi->value == lo.value && (hi->open || lo.open))))
      return false;
    earliest = lo;
  }
  return true;
}

}  // namespace tazone
