// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "dgraph/generator.hpp"
#include "dgraph/oracle.hpp"
#include "dgraph/recognizer.hpp"
#include "support/test_graphs.hpp"

namespace dgraph {
namespace {

using testing::make_graph;

// v -> w -> x -> t with the shortcut v -> t: an if-then whose branch is a
// sequence.
FlowGraph if_then_with_sequence() {
  return make_graph({{"v", "w"}, {"v", "t"}, {"w", "x"}, {"x", "t"}}, "v");
}

TEST(Recognize, TrivialGraph) {
  Verdict v = recognize(make_graph({}, "a"));
  EXPECT_EQ(v.status, Status::kDijkstra);
  EXPECT_TRUE(v.trace.empty());
}

TEST(Recognize, TwoVertexChainNeedsFinalCheck) {
  Verdict v = recognize(make_graph({{"a", "b"}}, "a"));
  EXPECT_EQ(v.status, Status::kDijkstra);
  EXPECT_EQ(v.trace.size(), 1u);
}

TEST(Recognize, IfThenWithSequenceBranch) {
  FlowGraph g = if_then_with_sequence();
  Verdict v = recognize(g);
  ASSERT_EQ(v.status, Status::kDijkstra);
  ASSERT_EQ(v.trace.size(), 2u);
  EXPECT_EQ(v.trace.steps[0].kind, StatementKind::sequence());
  EXPECT_EQ(g.name(v.trace.steps[0].source), "w");
  EXPECT_EQ(v.trace.steps[1].kind, StatementKind::if_then());
  EXPECT_EQ(g.name(v.trace.steps[1].source), "v");
}

TEST(Recognize, EdgeBoundRejectsWithoutTraversal) {
  FlowGraph g = make_graph(
      {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "b"}, {"b", "a"}}, "a");
  ScanStats stats;
  Verdict v = recognize(g, &stats);
  EXPECT_EQ(v.status, Status::kNotDijkstra);
  EXPECT_EQ(v.reason, Reason::kEdgeBoundExceeded);
  EXPECT_EQ(stats.edges_examined, 0u);
}

TEST(Recognize, IrreducibleTwoEntryLoopGetsStuck) {
  FlowGraph g = make_graph(
      {{"s", "a"}, {"s", "b"}, {"a", "b"}, {"b", "a"}, {"a", "t"}, {"b", "t"}}, "s");
  Verdict v = recognize(g);
  EXPECT_EQ(v.status, Status::kNotDijkstra);
  EXPECT_EQ(v.reason, Reason::kStuckResidue);
  EXPECT_GT(v.residual_vertices, 1u);
  EXPECT_FALSE(oracle_reduce(g).reducible);
}

TEST(Recognize, UnreachableVertexIsNotAFlowGraph) {
  Verdict v = recognize(make_graph({{"a", "b"}}, "a", {"c"}));
  EXPECT_EQ(v.status, Status::kNotFlowGraph);
  EXPECT_EQ(v.reason, Reason::kUnreachable);
}

TEST(Recognize, TopLevelLoopWithSequenceBody) {
  // The only edge into the source is the loop edge a -> v; {a, v} must not
  // be taken for a sequence.
  FlowGraph g = make_graph({{"v", "w"}, {"w", "a"}, {"a", "v"}, {"v", "t"}}, "v");
  Verdict v = recognize(g);
  EXPECT_EQ(v.status, Status::kDijkstra);
  EXPECT_EQ(v.trace.size(), 2u);
  EXPECT_TRUE(oracle_reduce(g).reducible);
}

TEST(Recognize, LoopThroughTheSourceWithSeparateLatch) {
  // Exit at c, latch d: no expansion sequence builds this, even though
  // taking {d, s} for a sequence would rotate it into a repeat loop.
  FlowGraph g = make_graph(
      {{"s", "b"}, {"b", "c"}, {"c", "d"}, {"c", "x"}, {"d", "s"}}, "s");
  EXPECT_FALSE(recognize(g).is_dijkstra());
  EXPECT_FALSE(oracle_reduce(g).reducible);
}

TEST(Recognize, DescribeNamesTheReason) {
  Verdict v;
  v.reason = Reason::kStuckResidue;
  v.residual_vertices = 4;
  EXPECT_EQ(describe(v), "stuck-residue (4 vertices left)");
  EXPECT_STREQ(to_string(Status::kNotFlowGraph), "NOT-FLOW-GRAPH");
  EXPECT_STREQ(to_string(Reason::kEdgeBoundExceeded), "edge-bound-exceeded");
}

TEST(Replay, Examples) {
  FlowGraph trivial = make_graph({}, "a");
  EXPECT_TRUE(replay(trivial, {}).is_trivial());

  FlowGraph g = if_then_with_sequence();
  EXPECT_TRUE(replay(g, recognize(g).trace).is_trivial());

  FlowGraph chain = make_graph({{"a", "b"}, {"b", "c"}}, "a");
  ContractionTrace bogus;
  bogus.steps.push_back({StatementKind::if_then(), 0, 2, {0, 1, 2}, {1, 2}});
  try {
    replay(chain, bogus);
    FAIL();
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.step(), 0u);
  }
}

TEST(Replay, StopsAtTheFirstBadStep) {
  FlowGraph g = if_then_with_sequence();
  ContractionTrace trace = recognize(g).trace;
  std::swap(trace.steps[0], trace.steps[1]);
  try {
    replay(g, trace);
    FAIL();
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.step(), 0u);
  }
}

TEST(RecognizeProperties, GeneratedGraphsAreAcceptedBottomUp) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    FlowGraph g = generate_dg(seed, 1 + seed % 60).graph;
    Verdict v = recognize(g);
    ASSERT_EQ(v.status, Status::kDijkstra) << "seed " << seed;
    EXPECT_LE(g.edge_count() + 2, 2 * g.vertex_count());
    EXPECT_TRUE(replay(g, v.trace).is_trivial());

    // At each step no prime sits at a vertex later in topological order.
    CycleEdgeSet c = detect_cycle_edges(g);
    TopoOrder topo = topo_sort(g, c);
    ReductionGraph work(g, c);
    for (const PrimeMatch& step : v.trace.steps) {
      for (VertexIndex u : work.live_vertices()) {
        if (topo.rank[u] > topo.rank[step.source]) {
          EXPECT_FALSE(work.match_at(u)) << "seed " << seed;
        }
      }
      work.contract(step);
    }
  }
}

TEST(RecognizeProperties, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  std::size_t positives = 0;
  for (int round = 0; round < 600; ++round) {
    const std::size_t n = 1 + round % 8;
    FlowGraph g = testing::random_flow_graph(n, 0.12, rng);
    OracleResult o = oracle_reduce(g);
    Verdict v = recognize(g);
    ASSERT_EQ(v.is_dijkstra(), o.reducible) << "round " << round;
    if (v.is_dijkstra()) {
      EXPECT_EQ(v.trace.size(), o.contractions);
      ++positives;
    }
  }
  EXPECT_GT(positives, 50u);
}

TEST(RecognizeProperties, AgreesWithOracleOnPerturbedGraphs) {
  const PerturbMode modes[] = {PerturbMode::kAddEdge, PerturbMode::kDeleteEdge,
                               PerturbMode::kRedirectEdge,
                               PerturbMode::kAddCrossEntry};
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    FlowGraph base = generate_dg(seed, 3 + seed % 7).graph;
    if (base.vertex_count() > 12) continue;
    for (PerturbMode mode : modes) {
      FlowGraph g;
      try {
        g = perturb(base, seed * 7 + 1, mode);
      } catch (const PerturbError&) {
        continue;
      }
      Verdict v = recognize(g);
      if (v.status == Status::kNotFlowGraph) continue;
      OracleResult o = oracle_reduce(g);
      ASSERT_EQ(v.is_dijkstra(), o.reducible)
          << "seed " << seed << " " << to_string(mode);
      if (mode == PerturbMode::kAddCrossEntry) {
        EXPECT_FALSE(v.is_dijkstra());
      }
      ++compared;
    }
  }
  EXPECT_GT(compared, 1000u);
}

}  // namespace
}  // namespace dgraph
