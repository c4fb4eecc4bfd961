#include "tazone/oracles.hpp"

#include "tazone/alu.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace tazone::oracles {

namespace {

std::vector<std::int64_t> key_of(const DistanceGraph& g) {
  std::vector<std::int64_t> key;
  key.reserve(g.dimension() * g.dimension());
  for (ClockIndex i = 0; i < g.dimension(); ++i)
    for (ClockIndex j = 0; j < g.dimension(); ++j)
      key.push_back(g(i, j).raw());
  return key;
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Comparison random_op(std::mt19937_64& rng) { return static_cast<Comparison>(pick(rng, 0, 4)); }

Guard random_guard(std::mt19937_64& rng, std::size_t clocks, std::int64_t max_constant, std::int64_t max_atoms) {
  Guard g;
  const std::int64_t atoms = pick(rng, 1, max_atoms);
  for (std::int64_t k = 0; k < atoms; ++k)
    g.atoms.push_back({static_cast<ClockIndex>(pick(rng, 1, static_cast<std::int64_t>(clocks))), random_op(rng),
                       pick(rng, 0, max_constant)});
  return g;
}

std::vector<ClockIndex> random_subset(std::mt19937_64& rng, std::size_t clocks, bool nonempty) {
  std::vector<ClockIndex> out;
  do {
    out.clear();
    for (ClockIndex x = 1; x <= clocks; ++x)
      if (pick(rng, 0, 1))
        out.push_back(x);
  } while (nonempty && out.empty());
  return out;
}

}  // namespace

ZoneRecipe random_recipe(std::uint64_t seed, std::size_t clocks, std::int64_t max_constant, std::size_t max_steps) {
  std::mt19937_64 rng(seed);
  ZoneRecipe recipe{seed, clocks, {}};
  const std::int64_t steps = pick(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(max_steps, 1)));
  for (std::int64_t k = 0; k < steps; ++k) {
    const std::int64_t roll = pick(rng, 0, 99);
    RecipeStep step;
    if (roll < 45) {
      step.kind = RecipeStep::Kind::kConstrain;
      step.guard = random_guard(rng, clocks, max_constant, 2);
    } else if (roll < 70) {
      step.kind = RecipeStep::Kind::kReset;
      step.resets = random_subset(rng, clocks, true);
    } else {
      step.kind = RecipeStep::Kind::kElapse;
    }
    recipe.steps.push_back(std::move(step));
  }
  return recipe;
}

DistanceGraph replay(const ZoneRecipe& recipe) {
  DistanceGraph g = DistanceGraph::zero(recipe.clocks);
  for (const auto& step : recipe.steps) {
    switch (step.kind) {
      case RecipeStep::Kind::kConstrain:
        g = constrain(g, step.guard);
        if (g.is_empty_marker())
          return g;
        break;
      case RecipeStep::Kind::kReset: g = reset(g, step.resets); break;
      case RecipeStep::Kind::kElapse: g = time_elapse(g); break;
    }
  }
  return g;
}

std::vector<DistanceGraph> zone_corpus(std::size_t clocks, std::int64_t max_constant, std::size_t count,
                                       std::uint64_t seed, bool time_elapsed) {
  std::vector<DistanceGraph> corpus;
  std::set<std::vector<std::int64_t>> seen;
  for (std::uint64_t s = seed; corpus.size() < count && s < seed + 500 * count; ++s) {
    ZoneRecipe recipe = random_recipe(s, clocks, max_constant);
    if (time_elapsed)
      recipe.steps.push_back({RecipeStep::Kind::kElapse, {}, {}});
    DistanceGraph z = replay(recipe);
    if (z.is_empty_marker())
      continue;
    if (seen.insert(key_of(z)).second)
      corpus.push_back(std::move(z));
  }
  return corpus;
}

std::vector<LuBounds> all_lu_maps(std::size_t clocks, std::int64_t max_constant) {
  std::vector<LuConstant> values{LuConstant::minus_infinity()};
  for (std::int64_t c = 0; c <= max_constant; ++c)
    values.push_back(LuConstant::finite(c));
  std::vector<LuBounds> maps;
  std::vector<std::size_t> digits(2 * clocks, 0);
  while (true) {
    LuBounds lu = LuBounds::unbounded(clocks);
    for (ClockIndex x = 1; x <= clocks; ++x) {
      lu.lower[x] = values[digits[2 * (x - 1)]];
      lu.upper[x] = values[digits[2 * (x - 1) + 1]];
    }
    maps.push_back(std::move(lu));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == values.size())
      digits[k++] = 0;
    if (k == digits.size())
      break;
  }
  return maps;
}

std::vector<Valuation> grid_points(std::size_t clocks, std::int64_t denominator, std::int64_t max_coordinate,
                                   std::size_t limit) {
  const std::int64_t top = denominator * max_coordinate;
  double total = 1;
  for (std::size_t k = 0; k < clocks; ++k)
    total *= static_cast<double>(top + 1);
  if (total > static_cast<double>(limit))
    throw ResourceLimitExceeded("grid of " + std::to_string(static_cast<long long>(total)) + " points exceeds the limit");
  std::vector<Valuation> points;
  std::vector<std::int64_t> numerators(clocks, 0);
  while (true) {
    points.emplace_back(numerators, denominator);
    std::size_t k = 0;
    while (k < clocks && ++numerators[k] > top)
      numerators[k++] = 0;
    if (k == clocks)
      break;
  }
  return points;
}

std::vector<Valuation> grid_valuations(const DistanceGraph& z, const BoundFunction& alpha, std::size_t limit) {
  if (z.clock_count() != alpha.clock_count())
    throw std::invalid_argument("grid_valuations: clock count mismatch");
  const auto denominator = static_cast<std::int64_t>(2 * (z.clock_count() + 1));
  std::vector<Valuation> points;
  for (auto& v : grid_points(z.clock_count(), denominator, alpha.max_constant() + 1, limit))
    if (contains_valuation(z, v))
      points.push_back(std::move(v));
  return points;
}

Valuation pick_valuation(const DistanceGraph& z) {
  if (z.is_empty_marker() || !z.is_canonical())
    throw std::invalid_argument("pick_valuation: zone must be canonical and nonempty");
  DistanceGraph g = z;
  std::int64_t scale = 1;
  for (ClockIndex x = 1; x < g.dimension(); ++x) {
    // Doubling makes every nonempty open interval at least 2 units wide.
    g = scaled(g, 2);
    scale *= 2;
    const Weight lower = g(x, 0);
    const std::int64_t t = lower.is_strict() ? -lower.value() + 1 : -lower.value();
    g.set(0, x, Weight::weak(t));
    g.set(x, 0, Weight::weak(-t));
    g = canonicalize(std::move(g));
    if (g.is_empty_marker())
      throw std::logic_error("pick_valuation: projection left the zone");
  }
  std::vector<std::int64_t> numerators;
  for (ClockIndex x = 1; x < g.dimension(); ++x)
    numerators.push_back(g(0, x).value());
  return Valuation(std::move(numerators), scale);
}

std::vector<Valuation> region_samples(const DistanceGraph& z, const BoundFunction& alpha, std::size_t limit) {
  std::vector<Valuation> samples;
  for (const auto& r : enumerate_regions(alpha, limit)) {
    DistanceGraph meet = canonicalize(intersect_min(region_to_dbm(r), z));
    if (!meet.is_empty_marker())
      samples.push_back(pick_valuation(meet));
  }
  return samples;
}

bool all_members(const std::vector<Valuation>& points, const DistanceGraph& zp, const LuBounds& lu) {
  return std::all_of(points.begin(), points.end(),
                     [&](const Valuation& v) { return alu_member_oracle(v, zp, lu); });
}

bool rlu_after_some_delay(const Valuation& v, const Valuation& vp, const LuBounds& lu) {
  std::int64_t bound = 0;
  for (ClockIndex x = 1; x <= lu.clock_count(); ++x)
    bound = std::max({bound, lu.lower[x].value_or(0), lu.upper[x].value_or(0)});
  std::vector<Rational> crossings{Rational(0)};
  for (ClockIndex x = 1; x <= vp.clock_count(); ++x)
    for (std::int64_t c = 0; c <= bound + 1; ++c)
      if (vp.compare(x, c) < 0)
        crossings.push_back(Rational(c) - vp[x]);
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
  std::vector<Rational> delays;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    delays.push_back(crossings[k]);
    delays.push_back(k + 1 < crossings.size() ? (crossings[k] + crossings[k + 1]) / 2 : crossings[k] + 1);
  }
  return std::any_of(delays.begin(), delays.end(),
                     [&](const Rational& d) { return rlu_contains(v, vp.delayed(d), lu); });
}

Automaton random_automaton(std::uint64_t seed, const AutomatonShape& shape) {
  std::mt19937_64 rng(seed);
  const auto states = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(shape.max_states)));
  const auto transitions = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(shape.max_transitions)));
  std::vector<std::string> names;
  for (std::size_t q = 0; q < states; ++q)
    names.push_back("q" + std::to_string(q));
  std::vector<std::string> clocks;
  for (std::size_t x = 0; x < shape.clocks; ++x)
    clocks.push_back(std::string(1, static_cast<char>('x' + x % 3)) + (x >= 3 ? std::to_string(x) : ""));
  std::vector<Transition> ts;
  const auto last = static_cast<std::int64_t>(states) - 1;
  for (std::size_t k = 0; k < transitions; ++k) {
    Transition t;
    t.source = static_cast<StateId>(pick(rng, 0, last));
    t.target = static_cast<StateId>(pick(rng, 0, last));
    if (pick(rng, 0, 3) > 0)
      t.guard = random_guard(rng, shape.clocks, shape.max_constant, 2);
    t.resets = random_subset(rng, shape.clocks, false);
    ts.push_back(std::move(t));
  }
  return Automaton(std::move(names), 0, {static_cast<StateId>(last)}, std::move(clocks), std::move(ts));
}

Verdict region_graph_reachability(const Automaton& a, std::size_t limit) {
  BoundFunction alpha;
  alpha.alpha.assign(a.clock_count() + 1, 0);
  for (const auto& t : a.transitions())
    for (const auto& atom : t.guard.atoms)
      alpha.alpha[atom.clock] = std::max(alpha.alpha[atom.clock], atom.constant);
  return region_graph_reachability(a, alpha, limit);
}

Verdict region_graph_reachability(const Automaton& a, const BoundFunction& alpha, std::size_t limit) {
  if (alpha.clock_count() != a.clock_count())
    throw std::invalid_argument("region_graph_reachability: clock count mismatch");
  using Node = std::pair<StateId, RegionDescriptor>;
  std::set<Node> seen;
  std::deque<Node> queue;
  auto visit = [&](StateId q, RegionDescriptor r) {
    Node node{q, std::move(r)};
    if (seen.insert(node).second) {
      if (seen.size() > limit)
        throw ResourceLimitExceeded("region graph exceeds the node limit");
      queue.push_back(std::move(node));
    }
  };
  visit(a.initial(), region_of(Valuation::zero(a.clock_count()), alpha));
  while (!queue.empty()) {
    const Node node = std::move(queue.front());
    queue.pop_front();
    if (a.is_accepting(node.first))
      return Verdict::kReachable;
    const Valuation v = representative(node.second);
    // Every time successor region, found at integer crossings and between them.
    std::vector<Rational> crossings{Rational(0)};
    for (ClockIndex x = 1; x <= v.clock_count(); ++x)
      for (std::int64_t c = 0; c <= alpha.alpha[x] + 1; ++c)
        if (v.compare(x, c) < 0)
          crossings.push_back(Rational(c) - v[x]);
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      visit(node.first, region_of(v.delayed(crossings[k]), alpha));
      const Rational next = k + 1 < crossings.size() ? (crossings[k] + crossings[k + 1]) / 2 : crossings[k] + 1;
      visit(node.first, region_of(v.delayed(next), alpha));
    }
    for (std::size_t t : a.outgoing(node.first)) {
      const auto& tr = a.transitions()[t];
      if (satisfies(v, tr.guard))
        visit(tr.target, region_of(v.with_reset(tr.resets), alpha));
    }
  }
  return Verdict::kUnreachable;
}

OracleCheckReport run_oracle_check(std::uint64_t seed, std::size_t clocks, std::size_t iterations) {
  if (clocks == 0)
    throw std::invalid_argument("oracle check needs at least one clock");
  const std::int64_t max_constant = clocks <= 2 ? 3 : 2;
  const auto corpus = zone_corpus(clocks, max_constant, 200, seed);
  const BoundFunction alpha = BoundFunction::uniform(clocks, max_constant);
  std::vector<std::vector<Valuation>> samples;
  for (const auto& z : corpus)
    samples.push_back(region_samples(z, alpha, 1'000'000));

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  OracleCheckReport report;
  const auto last = static_cast<std::int64_t>(corpus.size()) - 1;
  for (std::size_t k = 0; k < iterations; ++k) {
    const auto i = static_cast<std::size_t>(pick(rng, 0, last));
    const auto j = static_cast<std::size_t>(pick(rng, 0, last));
    LuBounds lu = LuBounds::unbounded(clocks);
    for (ClockIndex x = 1; x <= clocks; ++x) {
      const std::int64_t l = pick(rng, -1, max_constant), u = pick(rng, -1, max_constant);
      lu.lower[x] = l < 0 ? LuConstant::minus_infinity() : LuConstant::finite(l);
      lu.upper[x] = u < 0 ? LuConstant::minus_infinity() : LuConstant::finite(u);
    }
    ++report.pairs;
    const bool fast = alu_includes(corpus[i], corpus[j], lu);
    const bool slow = all_members(samples[i], corpus[j], lu);
    if (fast != slow) {
      if (report.disagreements++ == 0) {
        std::ostringstream os;
        os << to_string(lu) << "\nalu_includes=" << fast << " oracle=" << slow << "\nZ:\n"
           << to_string(corpus[i]) << "Z':\n" << to_string(corpus[j]);
        report.counterexample = os.str();
      }
    }
  }
  return report;
}

}  // namespace tazone::oracles
