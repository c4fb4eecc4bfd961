#include "tazone/alu.hpp"

#include <stdexcept>

namespace tazone {

namespace {

// w <= (<=, b); false when b is -inf.
bool at_most(Weight w, LuConstant b) { return b.is_finite() && w <= Weight::weak(b.value()); }

void require_zone(const DistanceGraph& g, const char* what) {
  if (g.is_empty_marker())
    throw std::invalid_argument(std::string(what) + ": zone must be nonempty");
  if (!g.is_canonical())
    throw std::invalid_argument(std::string(what) + ": zone must be canonical");
}

ClockPartition partition_of(const DistanceGraph& region_graph, const LuBounds& lu) {
  ClockPartition p;
  p.classes.assign(region_graph.dimension(), ClockClass::kB);
  for (ClockIndex x = 1; x < region_graph.dimension(); ++x) {
    const Weight upper = region_graph(0, x);
    const bool below_l = at_most(upper, lu.lower[x]);
    const bool below_u = at_most(upper, lu.upper[x]);
    if (below_l && below_u)
      p.classes[x] = ClockClass::kB;
    else if (below_u)
      p.classes[x] = ClockClass::kL;
    else if (below_l)
      p.classes[x] = ClockClass::kU;
    else
      p.classes[x] = ClockClass::kM;
  }
  return p;
}

}  // namespace

ClockPartition partition_clocks(const RegionDescriptor& r, const LuBounds& lu) {
  if (lu.clock_count() != r.clock_count())
    throw std::invalid_argument("partition_clocks: clock count mismatch");
  return partition_of(region_to_dbm(r), lu);
}

DistanceGraph alu_inverse_graph(const RegionDescriptor& r, const LuBounds& lu) {
  if (lu.clock_count() != r.clock_count())
    throw std::invalid_argument("alu_inverse_graph: clock count mismatch");
  const DistanceGraph gr = region_to_dbm(r);
  const ClockPartition p = partition_of(gr, lu);
  DistanceGraph result = gr;
  for (ClockIndex i = 0; i < gr.dimension(); ++i) {
    for (ClockIndex j = 0; j < gr.dimension(); ++j) {
      if (i == j)
        continue;
      if (p.in_u_or_m(j)) {
        result.set(i, j, Weight::infinity());
      } else if (p.in_l_or_m(i)) {
        if (j != 0 || lu.lower[i].is_minus_infinity())
          result.set(i, j, Weight::infinity());
        else
          result.set(i, j, Weight::strict(-lu.lower[i].value()));
      } else {
        result.set(i, j, gr(i, j));
      }
    }
  }
  return result;
}

bool region_in_alu(const RegionDescriptor& r, const DistanceGraph& zp, const LuBounds& lu) {
  require_zone(zp, "region_in_alu");
  if (zp.clock_count() != r.clock_count() || lu.clock_count() != r.clock_count())
    throw std::invalid_argument("region_in_alu: clock count mismatch");
  const DistanceGraph gr = region_to_dbm(r);
  const ClockPartition p = partition_of(gr, lu);
  const std::size_t dim = gr.dimension();
  for (ClockIndex x = 0; x < dim; ++x) {
    if (!p.in_b_or_l(x))
      continue;
    const Weight r0x = x == 0 ? Weight::zero() : gr(0, x);
    for (ClockIndex y = 0; y < dim; ++y) {
      if (p.in_b_or_u(y)) {
        if (zp(x, y) + gr(y, x) < Weight::zero())
          return false;
      } else if (lu.lower[y].is_finite()) {
        if (r0x + zp(x, y) + Weight::strict(-lu.lower[y].value()) < Weight::zero())
          return false;
      }
    }
  }
  return true;
}

Weight min_region_weight(const DistanceGraph& z, ClockIndex x, ClockIndex y, const BoundFunction& alpha) {
  require_zone(z, "min_region_weight");
  if (x >= z.dimension() || y >= z.dimension() || alpha.clock_count() != z.clock_count())
    throw std::invalid_argument("min_region_weight: clock out of range");
  if (x == y)
    return Weight::zero();
  if (z(x, 0) < Weight::weak(-alpha.alpha[x]))
    return Weight::infinity();
  const Weight via_zero = ceil(-z(x, 0)) + Weight::strict(-alpha.alpha[y]);
  // An unbounded z(x, y) contributes -inf to the maximum.
  if (z(x, y).is_infinite())
    return via_zero;
  return max(ceil(-z(x, y)), via_zero);
}

bool alu_includes(const DistanceGraph& z, const DistanceGraph& zp, const LuBounds& lu, std::uint64_t* comparisons) {
  require_zone(z, "alu_includes");
  require_zone(zp, "alu_includes");
  if (z.dimension() != zp.dimension() || lu.clock_count() != z.clock_count())
    throw std::invalid_argument("alu_includes: dimension mismatch");
  const std::size_t dim = z.dimension();
  std::uint64_t count = 0;
  bool included = true;
  for (ClockIndex x = 0; x < dim && included; ++x) {
    const Weight zx0 = z(x, 0);
    for (ClockIndex y = 0; y < dim; ++y) {
      if (x == y)
        continue;
      // A -inf bound never yields a witness: U_x for the first condition, L_y for the third.
      if (lu.upper[x].is_minus_infinity())
        continue;
      ++count;
      if (zx0 < Weight::weak(-lu.upper[x].value()))
        continue;
      const Weight zpxy = zp(x, y);
      ++count;
      if (!(zpxy < z(x, y)))
        continue;
      if (lu.lower[y].is_minus_infinity())
        continue;
      ++count;
      if (zpxy + Weight::strict(-lu.lower[y].value()) < zx0) {
        included = false;
        break;
      }
    }
  }
  if (comparisons)
    *comparisons += count;
  return included;
}

bool alu_member_oracle(const Valuation& v, const DistanceGraph& zp, const LuBounds& lu) {
  if (zp.is_empty_marker())
    return false;
  const ScaledZone box = up_set_box(v, lu);
  return !is_empty(intersect_min(box.graph, scaled(zp, box.scale)));
}

}  // namespace tazone
