// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "tazone/alu.hpp"
#include "tazone/automaton.hpp"
#include "tazone/dbm.hpp"
#include "tazone/explorer.hpp"
#include "tazone/model_io.hpp"
#include "tazone/oracles.hpp"
#include "tazone/regions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tazone {
namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool subset_of(const Bits& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k])
        return false;
    return true;
  }
  bool intersects(const Bits& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k])
        return true;
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<std::int64_t> key_of(const ScaledZone& zone) {
  std::vector<std::int64_t> key{zone.scale};
  for (ClockIndex i = 0; i < zone.graph.dimension(); ++i)
    for (ClockIndex j = 0; j < zone.graph.dimension(); ++j)
      key.push_back(zone.graph(i, j).raw());
  return key;
}

/// Oracle membership of every point in a<=LU(Zp), evaluated once per distinct
/// up-set box since the oracle only looks at the box.
class MembershipTable {
 public:
  MembershipTable(const std::vector<Valuation>& points, const LuBounds& lu) : points_(points), lu_(lu) {
    std::map<std::vector<std::int64_t>, std::size_t> ids;
    box_of_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [it, fresh] = ids.emplace(key_of(up_set_box(points[i], lu)), ids.size());
      if (fresh)
        witness_.push_back(i);
      box_of_.push_back(it->second);
    }
  }

  Bits members(const DistanceGraph& zp) const {
    std::vector<char> by_box(witness_.size());
    for (std::size_t b = 0; b < witness_.size(); ++b)
      by_box[b] = alu_member_oracle(points_[witness_[b]], zp, lu_);
    Bits bits(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (by_box[box_of_[i]])
        bits.set(i);
    return bits;
  }

 private:
  const std::vector<Valuation>& points_;
  const LuBounds& lu_;
  std::vector<std::size_t> box_of_;
  std::vector<std::size_t> witness_;
};

std::string show_lu(const LuBounds& lu) { return to_string(lu); }

struct ExhaustiveRun {
  std::size_t zones = 0;
  std::size_t maps = 0;
  std::size_t points = 0;
  std::uint64_t pairs = 0;
  std::uint64_t included = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t same_region_checks = 0;
  std::uint64_t region_violations = 0;
  std::string first;
};

/// Every zone pair of the corpus under every LU map with constants up to
/// `max_constant`, against the grid oracle.  Also checks that oracle
/// membership is constant on the regions of each map.
ExhaustiveRun exhaustive_inclusion(std::size_t clocks, std::int64_t max_constant) {
  ExhaustiveRun run;
  const auto corpus = oracles::zone_corpus(clocks, max_constant, 200, kSeed);
  const std::int64_t denominator = 2 * static_cast<std::int64_t>(clocks + 1);
  const std::int64_t box = static_cast<std::int64_t>(clocks) * (max_constant + 1) + 1;
  const auto grid = oracles::grid_points(clocks, denominator, box);
  run.zones = corpus.size();
  run.points = grid.size();

  std::vector<Bits> inside(corpus.size(), Bits(grid.size()));
  for (std::size_t z = 0; z < corpus.size(); ++z)
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (contains_valuation(corpus[z], grid[i]))
        inside[z].set(i);

  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> region_ids;
  auto regions_for = [&](const BoundFunction& alpha) -> const std::vector<std::size_t>& {
    auto it = region_ids.find(alpha.alpha);
    if (it != region_ids.end())
      return it->second;
    std::map<RegionDescriptor, std::size_t> ids;
    std::vector<std::size_t> of_point;
    for (const auto& v : grid)
      of_point.push_back(ids.emplace(region_of(v, alpha), ids.size()).first->second);
    return region_ids.emplace(alpha.alpha, std::move(of_point)).first->second;
  };

  const auto maps = oracles::all_lu_maps(clocks, max_constant);
  run.maps = maps.size();
  for (const auto& lu : maps) {
    const MembershipTable table(grid, lu);
    const auto& region = regions_for(BoundFunction::from_lu(lu));
    std::vector<Bits> members;
    members.reserve(corpus.size());
    for (const auto& zp : corpus) {
      members.push_back(table.members(zp));
      std::map<std::size_t, bool> seen;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool in = members.back().test(i);
        auto [it, fresh] = seen.emplace(region[i], in);
        if (!fresh) {
          ++run.same_region_checks;
          if (it->second != in)
            ++run.region_violations;
        }
      }
    }
    for (std::size_t z = 0; z < corpus.size(); ++z) {
      for (std::size_t zp = 0; zp < corpus.size(); ++zp) {
        const bool expected = inside[z].subset_of(members[zp]);
        const bool actual = alu_includes(corpus[z], corpus[zp], lu);
        ++run.pairs;
        run.included += actual;
        if (expected != actual && run.disagreements++ == 0)
          run.first = show_lu(lu) + "\n" + to_string(corpus[z]) + to_string(corpus[zp]);
      }
    }
  }
  return run;
}

struct RandomRun {
  std::uint64_t pairs = 0;
  std::uint64_t included = 0;
  std::uint64_t disagreements = 0;
  std::string first;
};

/// Random pairs at three clocks; the oracle checks one exact point of Z in
/// every region of the finest map.
RandomRun randomized_inclusion(std::size_t clocks, std::int64_t max_constant, std::uint64_t pairs) {
  RandomRun run;
  const auto corpus = oracles::zone_corpus(clocks, max_constant, 200, kSeed);
  const BoundFunction finest = BoundFunction::uniform(clocks, max_constant);
  std::vector<std::vector<Valuation>> samples;
  for (const auto& z : corpus)
    samples.push_back(oracles::region_samples(z, finest));
  const auto maps = oracles::all_lu_maps(clocks, max_constant);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> pick_zone(0, corpus.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_map(0, maps.size() - 1);
  for (std::uint64_t k = 0; k < pairs; ++k) {
    const std::size_t z = pick_zone(rng), zp = pick_zone(rng);
    const LuBounds& lu = maps[pick_map(rng)];
    const bool expected = oracles::all_members(samples[z], corpus[zp], lu);
    const bool actual = alu_includes(corpus[z], corpus[zp], lu);
    ++run.pairs;
    run.included += actual;
    if (expected != actual && run.disagreements++ == 0)
      run.first = show_lu(lu) + "\n" + to_string(corpus[z]) + to_string(corpus[zp]);
  }
  return run;
}

struct InclusionRuns {
  ExhaustiveRun one;
  ExhaustiveRun two;
  RandomRun three;
};

const InclusionRuns& inclusion_runs() {
  static const InclusionRuns runs{exhaustive_inclusion(1, 3), exhaustive_inclusion(2, 3), randomized_inclusion(3, 2, 100000)};
  return runs;
}

Outcome criterion1() {
  const auto& r = inclusion_runs();
  std::ostringstream os;
  os << "1 clock: " << r.one.pairs << " pairs (" << r.one.zones << " zones, " << r.one.maps << " maps, "
     << r.one.points << " grid points), " << r.one.included << " included, " << r.one.disagreements
     << " disagreements; 2 clocks: " << r.two.pairs << " pairs (" << r.two.zones << " zones, " << r.two.maps
     << " maps, " << r.two.points << " grid points), " << r.two.included << " included, " << r.two.disagreements
     << " disagreements; 3 clocks: " << r.three.pairs << " random pairs, " << r.three.included << " included, "
     << r.three.disagreements << " disagreements";
  for (const auto* first : {&r.one.first, &r.two.first, &r.three.first})
    if (!first->empty())
      os << "\nfirst counterexample:\n" << *first;
  const bool pass = r.one.disagreements == 0 && r.two.disagreements == 0 && r.three.disagreements == 0 &&
                    r.one.pairs + r.two.pairs >= 10000 && r.three.pairs >= 100000;
  return {pass, os.str()};
}

Outcome criterion2() {
  const auto& r = inclusion_runs();
  std::ostringstream os;
  os << (r.one.same_region_checks + r.two.same_region_checks) << " same-region comparisons, "
     << (r.one.region_violations + r.two.region_violations) << " violations";
  return {r.one.region_violations == 0 && r.two.region_violations == 0 && r.two.same_region_checks > 0, os.str()};
}

Outcome criterion3() {
  const auto corpus = oracles::zone_corpus(2, 2, 200, kSeed, true);
  const BoundFunction finest = BoundFunction::uniform(2, 2);
  const auto regions = enumerate_regions(finest);
  std::map<RegionDescriptor, std::size_t> index;
  std::vector<Valuation> reps;
  for (const auto& r : regions) {
    index.emplace(r, index.size());
    reps.push_back(representative(r));
  }
  std::vector<Bits> meets(corpus.size(), Bits(regions.size()));
  for (std::size_t z = 0; z < corpus.size(); ++z)
    for (const auto& r : enumerate_regions_intersecting(corpus[z], finest))
      meets[z].set(index.at(r));

  const auto grid = oracles::grid_points(2, 6, 3);
  std::uint64_t checks = 0, members = 0, disagreements = 0;
  std::string first;
  const auto maps = oracles::all_lu_maps(2, 2);
  for (const auto& lu : maps) {
    const MembershipTable table(grid, lu);
    std::vector<Bits> oracle;
    for (const auto& zp : corpus)
      oracle.push_back(table.members(zp));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Bits simulated(regions.size());
      for (std::size_t r = 0; r < reps.size(); ++r)
        if (oracles::rlu_after_some_delay(grid[i], reps[r], lu))
          simulated.set(r);
      for (std::size_t zp = 0; zp < corpus.size(); ++zp) {
        const bool by_rlu = simulated.intersects(meets[zp]);
        ++checks;
        members += by_rlu;
        if (by_rlu != oracle[zp].test(i) && disagreements++ == 0)
          first = show_lu(lu) + " v=" + to_string(grid[i]) + "\n" + to_string(corpus[zp]);
      }
    }
  }
  std::ostringstream os;
  os << corpus.size() << " time-elapsed zones, " << maps.size() << " maps, " << grid.size() << " grid points: "
     << checks << " checks, " << members << " members, " << disagreements << " disagreements";
  if (!first.empty())
    os << "\nfirst counterexample: " << first;
  return {disagreements == 0, os.str()};
}

Outcome criterion4() {
  const auto grid = oracles::grid_points(2, 6, 3);
  const auto maps = oracles::all_lu_maps(2, 2);
  std::uint64_t checks = 0, executable = 0, disagreements = 0;
  std::string first;
  for (const auto& lu : maps) {
    for (const auto& v : grid) {
      const GuardSequence seq = build_test_sequence(v, lu);
      for (const auto& vp : grid) {
        const bool run = executable_from(vp, seq);
        const bool sweep = oracles::rlu_after_some_delay(v, vp, lu);
        ++checks;
        executable += run;
        if (run != sweep && disagreements++ == 0)
          first = show_lu(lu) + " v=" + to_string(v) + " vp=" + to_string(vp);
      }
    }
  }
  std::ostringstream os;
  os << maps.size() << " maps, " << grid.size() << " grid points: " << checks << " pairs, " << executable
     << " executable, " << disagreements << " disagreements";
  if (!first.empty())
    os << "\nfirst counterexample: " << first;
  return {disagreements == 0, os.str()};
}

Outcome criterion5() {
  std::uint64_t checks = 0, unbounded = 0, disagreements = 0;
  std::string first;
  for (std::size_t clocks : {1u, 2u}) {
    const auto corpus = oracles::zone_corpus(clocks, 3, 200, kSeed);
    std::vector<BoundFunction> alphas{BoundFunction::uniform(clocks, 0)};
    while (true) {
      BoundFunction next = alphas.back();
      ClockIndex x = 1;
      while (x <= clocks && next.alpha[x] == 3)
        next.alpha[x++] = 0;
      if (x > clocks)
        break;
      ++next.alpha[x];
      alphas.push_back(next);
    }
    for (const auto& z : corpus) {
      for (const auto& alpha : alphas) {
        const auto regions = enumerate_regions_intersecting(z, alpha);
        for (ClockIndex x = 0; x <= clocks; ++x) {
          for (ClockIndex y = 0; y <= clocks; ++y) {
            Weight brute = Weight::infinity();
            for (const auto& r : regions)
              brute = std::min(brute, region_to_dbm(r)(y, x));
            const Weight got = min_region_weight(z, x, y, alpha);
            ++checks;
            if (z(x, 0) < Weight::weak(-alpha.alpha[x]) && got.is_infinite())
              ++unbounded;
            if (got != brute && disagreements++ == 0) {
              std::ostringstream os;
              os << "x=" << x << " y=" << y << " got " << to_string(got) << " expected " << to_string(brute) << "\n"
                 << z;
              first = os.str();
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checks << " zone/bound/clock-pair checks, " << unbounded << " in the (<,inf) branch, " << disagreements
     << " disagreements";
  if (!first.empty())
    os << "\nfirst counterexample: " << first;
  return {disagreements == 0 && unbounded > 0, os.str()};
}

Outcome criterion6() {
  const auto targets = oracles::grid_points(2, 6, 3);
  const auto fine = oracles::grid_points(2, 18, 4);
  const auto maps = oracles::all_lu_maps(2, 2);
  std::uint64_t checks = 0, inside = 0, disagreements = 0, regions_seen = 0;
  std::string first;
  for (const auto& lu : maps) {
    const BoundFunction alpha = BoundFunction::from_lu(lu);
    std::map<RegionDescriptor, std::vector<const Valuation*>> points_of;
    for (const auto& v : fine)
      points_of[region_of(v, alpha)].push_back(&v);
    for (const auto& r : enumerate_regions(alpha)) {
      ++regions_seen;
      const auto& candidates = points_of[r];
      const DistanceGraph graph = canonicalize(alu_inverse_graph(r, lu));
      for (const auto& vp : targets) {
        const bool by_graph = !graph.is_empty_marker() && contains_valuation(graph, vp);
        const bool by_search = std::any_of(candidates.begin(), candidates.end(),
                                           [&](const Valuation* v) { return lu_preorder(*v, vp, lu); });
        ++checks;
        inside += by_graph;
        if (by_graph != by_search && disagreements++ == 0)
          first = show_lu(lu) + " " + to_string(r) + " vp=" + to_string(vp);
      }
    }
  }
  std::ostringstream os;
  os << maps.size() << " maps, " << regions_seen << " regions, " << targets.size() << " targets: " << checks
     << " checks, " << inside << " inside, " << disagreements << " disagreements";
  if (!first.empty())
    os << "\nfirst counterexample: " << first;
  return {disagreements == 0, os.str()};
}

struct AutomatonRun {
  Verdict expected;
  ReachabilityResult alu;
  std::optional<ReachabilityResult> subset;
  ExplorationStats subset_stats;
};

constexpr std::size_t kAutomata = 600;
constexpr std::uint64_t kSubsetBudget = 20000;

const std::vector<AutomatonRun>& automaton_runs() {
  static const std::vector<AutomatonRun> runs = [] {
    std::vector<AutomatonRun> out;
    for (std::uint64_t seed = 1; seed <= kAutomata; ++seed) {
      const Automaton a = oracles::random_automaton(seed);
      AutomatonRun run{oracles::region_graph_reachability(a), {}, std::nullopt, {}};
      run.alu = reachability(a, {InclusionMode::kAlu, SearchOrder::kBfs, false, 1'000'000});
      try {
        run.subset = reachability(a, {InclusionMode::kSubset, SearchOrder::kBfs, false, kSubsetBudget});
        run.subset_stats = run.subset->stats;
      } catch (const BudgetExceeded& e) {
        run.subset_stats = e.stats();
      }
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

Outcome criterion7() {
  std::uint64_t reachable = 0, alu_wrong = 0, subset_wrong = 0, subset_exhausted = 0, exhausted_reachable = 0;
  for (const auto& run : automaton_runs()) {
    reachable += run.expected == Verdict::kReachable;
    alu_wrong += run.alu.verdict != run.expected;
    if (run.subset) {
      subset_wrong += run.subset->verdict != run.expected;
    } else {
      ++subset_exhausted;
      exhausted_reachable += run.expected == Verdict::kReachable;
    }
  }
  std::ostringstream os;
  os << kAutomata << " automata (" << reachable << " reachable): alu disagreements " << alu_wrong
     << ", subset disagreements " << subset_wrong << ", alu budget exhaustions 0, subset runs without a verdict "
     << subset_exhausted << " (infinite zone graphs, all unreachable: " << (exhausted_reachable == 0 ? "yes" : "no")
     << ")";
  return {alu_wrong == 0 && subset_wrong == 0 && exhausted_reachable == 0, os.str()};
}

Outcome criterion8() {
  std::uint64_t violations = 0, strict = 0;
  for (const auto& run : automaton_runs()) {
    violations += run.alu.stats.nodes_visited > run.subset_stats.nodes_visited;
    strict += run.alu.stats.nodes_visited < run.subset_stats.nodes_visited;
  }
  const Automaton bounded = load_model(std::string(TAZONE_MODELS_DIR) + "/diverge_bounded.ta");
  const auto alu = reachability(bounded, {InclusionMode::kAlu, SearchOrder::kBfs, false, 1000});
  const auto subset = reachability(bounded, {InclusionMode::kSubset, SearchOrder::kBfs, false, 1000});
  const bool golden = alu.verdict == Verdict::kUnreachable && subset.verdict == Verdict::kUnreachable &&
                      alu.stats.nodes_visited == 2 && alu.stats.nodes_subsumed == 1 &&
                      alu.stats.inclusion_tests == 1 && subset.stats.nodes_visited == 6 &&
                      subset.stats.nodes_subsumed == 0 && subset.stats.inclusion_tests == 15;

  const Automaton diverge = load_model(std::string(TAZONE_MODELS_DIR) + "/diverge.ta");
  const auto alu_diverge = reachability(diverge, {InclusionMode::kAlu, SearchOrder::kBfs, false, 1000});
  bool subset_diverges = false;
  try {
    reachability(diverge, {InclusionMode::kSubset, SearchOrder::kBfs, false, 1000});
  } catch (const BudgetExceeded&) {
    subset_diverges = true;
  }

  std::ostringstream os;
  os << "alu > subset on " << violations << " of " << kAutomata << " automata, strictly fewer on " << strict
     << "; diverge_bounded.ta alu " << stats_line(alu) << " vs subset " << stats_line(subset)
     << "; diverge.ta alu visited=" << alu_diverge.stats.nodes_visited
     << (subset_diverges ? ", subset exhausts 1000 nodes" : ", subset terminates");
  return {violations == 0 && golden && subset_diverges && alu_diverge.stats.nodes_visited == 2, os.str()};
}

Outcome criterion9() {
  DistanceGraph g(2);
  g.tighten(1, 2, Weight::weak(-1));   // x - y >= 1
  g.tighten(0, 2, Weight::strict(2));  // y < 2
  g.tighten(1, 0, Weight::strict(-4)); // x > 4
  const DistanceGraph c = canonicalize(g);
  const bool pass = !c.is_empty_marker() && c(1, 2) == Weight::strict(-2);
  return {pass, "entry(x,y) = " + to_string(c(1, 2)) + "\n" + to_string(c, {"x", "y"})};
}

Outcome criterion10() {
  std::vector<double> ratios;
  std::ostringstream os;
  double micros_at_32 = 0;
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    const DistanceGraph z = time_elapse(DistanceGraph::zero(n));
    const LuBounds lu = LuBounds::uniform(n, 3);
    std::uint64_t count = 0;
    alu_includes(z, z, lu, &count);
    ratios.push_back(static_cast<double>(count) / static_cast<double>(n * n));
    os << "n=" << n << " comparisons=" << count << " ";
    if (n == 32) {
      std::vector<double> times;
      bool sink = true;
      for (int k = 0; k < 201; ++k) {
        const auto start = std::chrono::steady_clock::now();
        sink = alu_includes(z, z, lu) && sink;
        times.push_back(std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
      }
      std::nth_element(times.begin(), times.begin() + 100, times.end());
      micros_at_32 = sink ? times[100] : -1;
    }
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const double c = std::sqrt(*lo * *hi);
  const double spread = *hi / c;
  os << "c=" << c << " max deviation " << spread << "x, median time at n=32 " << micros_at_32 << " us";
  return {spread <= 1.3 && micros_at_32 >= 0 && micros_at_32 < 1000.0, os.str()};
}

}  // namespace
}  // namespace tazone

int main() {
  using namespace tazone;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"inclusion test equivalence", criterion1},
      {"region closedness", criterion2},
      {"abstraction on time-elapsed zones", criterion3},
      {"test sequence executability", criterion4},
      {"least region weight", criterion5},
      {"inverse graph", criterion6},
      {"end-to-end verdicts", criterion7},
      {"subsumption strength", criterion8},
      {"canonicalization golden case", criterion9},
      {"quadratic cost", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << " (" << criteria[k].first
              << ", " << std::fixed << std::setprecision(1) << seconds << "s): " << std::defaultfloat
              << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
