#include "tazone/explorer.hpp"

#include "tazone/model_io.hpp"
#include "tazone/oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tazone {
namespace {

using namespace tazone::testing;

const char* kDiverge = R"(clocks x y
state q0 initial
state q1 accepting
trans q0 -> q0 guard x==1 reset x
trans q0 -> q1 guard x>=2 && y<1
)";

void expect_valid_trace(const Automaton& a, const std::vector<TraceStep>& trace) {
  SymbolicState node = initial_node(a);
  for (const auto& step : trace) {
    ASSERT_EQ(step.source, node.state);
    const auto& t = a.transitions().at(step.transition);
    ASSERT_EQ(t.target, step.target);
    const auto next = successor(a, node, t);
    ASSERT_TRUE(next);
    node = *next;
  }
  EXPECT_TRUE(a.is_accepting(node.state));
}

TEST(Reachability, AcceptingInitialState) {
  const Automaton a({"q"}, 0, {0}, {"x"}, {});
  for (auto mode : {InclusionMode::kNone, InclusionMode::kSubset, InclusionMode::kAlu}) {
    const auto r = reachability(a, {mode, SearchOrder::kBfs, true});
    EXPECT_EQ(r.verdict, Verdict::kReachable);
    EXPECT_EQ(r.stats.nodes_visited, 1u);
    ASSERT_TRUE(r.trace);
    EXPECT_TRUE(r.trace->empty());
  }
}

TEST(Reachability, SingleTransition) {
  const Automaton a({"q0", "acc"}, 0, {1}, {"x"}, {{0, Guard{{{1, kGe, 1}}}, {}, 1}});
  const auto r = reachability(a, {InclusionMode::kAlu, SearchOrder::kBfs, true});
  EXPECT_EQ(r.verdict, Verdict::kReachable);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(*r.trace, (std::vector<TraceStep>{{0, 0, 1}}));
  EXPECT_EQ(stats_line(r), "verdict=R visited=2 subsumed=0 tests=0");
  EXPECT_FALSE(reachability(a, {InclusionMode::kAlu, SearchOrder::kBfs, false}).trace);
}

TEST(Reachability, DivergingLoop) {
  const Automaton a = parse_model(kDiverge);
  const auto alu = reachability(a, {InclusionMode::kAlu});
  EXPECT_EQ(alu.verdict, Verdict::kUnreachable);
  EXPECT_EQ(oracles::region_graph_reachability(a), Verdict::kUnreachable);
  EXPECT_THROW(reachability(a, {InclusionMode::kSubset, SearchOrder::kBfs, false, 500}), BudgetExceeded);
  try {
    reachability(a, {InclusionMode::kNone, SearchOrder::kDfs, false, 50});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.stats().nodes_visited, 50u);
  }
}

TEST(Reachability, CustomSubsumptionIsUsed) {
  const Automaton a = parse_model(kDiverge);
  int calls = 0;
  const auto r = reachability(a, {}, [&](const DistanceGraph&, const DistanceGraph&) {
    ++calls;
    return true;
  });
  EXPECT_EQ(r.verdict, Verdict::kUnreachable);
  EXPECT_EQ(static_cast<std::uint64_t>(calls), r.stats.inclusion_tests);
  EXPECT_EQ(r.stats.nodes_subsumed, 1u);
}

TEST(Reachability, DepthFirstFollowsDeclarationOrder) {
  // q0 -> q1 (dead end) declared before q0 -> q2 (accepting).
  const Automaton a({"q0", "q1", "q2"}, 0, {2}, {"x"}, {{0, {}, {}, 1}, {0, {}, {}, 2}});
  const auto dfs = reachability(a, {InclusionMode::kSubset, SearchOrder::kDfs, true});
  EXPECT_EQ(dfs.stats.nodes_visited, 3u);
  const auto bfs = reachability(a, {InclusionMode::kSubset, SearchOrder::kBfs, true});
  EXPECT_EQ(bfs.stats.nodes_visited, 3u);
  EXPECT_EQ(*dfs.trace, (std::vector<TraceStep>{{0, 1, 2}}));
}

TEST(Reachability, RandomAutomataAgreeWithRegionGraph) {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    const Automaton a = oracles::random_automaton(seed);
    const Verdict expected = oracles::region_graph_reachability(a);
    for (auto order : {SearchOrder::kBfs, SearchOrder::kDfs}) {
      const auto alu = reachability(a, {InclusionMode::kAlu, order, true, 100000});
      EXPECT_EQ(alu.verdict, expected) << print_model(a);
      if (alu.trace)
        expect_valid_trace(a, *alu.trace);
      std::uint64_t subset_visited = 0;
      try {
        const auto subset = reachability(a, {InclusionMode::kSubset, order, true, 3000});
        EXPECT_EQ(subset.verdict, expected) << print_model(a);
        subset_visited = subset.stats.nodes_visited;
      } catch (const BudgetExceeded& e) {
        if (order == SearchOrder::kBfs) {
          EXPECT_EQ(expected, Verdict::kUnreachable) << print_model(a);
        }
        subset_visited = e.stats().nodes_visited;
      }
      EXPECT_LE(alu.stats.nodes_visited, subset_visited);
      try {
        const auto none = reachability(a, {InclusionMode::kNone, order, false, 1000});
        EXPECT_EQ(none.verdict, expected);
        EXPECT_LE(subset_visited, none.stats.nodes_visited);
      } catch (const BudgetExceeded&) {
      }
    }
  }
}

}  // namespace
}  // namespace tazone
