// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "dgraph/flow_graph.hpp"
#include "support/test_graphs.hpp"

namespace dgraph {
namespace {

using testing::make_graph;
using testing::named_edges;

GraphErrorKind build_error(std::vector<std::string> names,
                           const testing::NamedEdges& edges,
                           const std::string& source) {
  try {
    FlowGraph::build(std::move(names), edges, source);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "build succeeded";
  return GraphErrorKind::kInvalidMatch;
}

TEST(FlowGraphBuild, TrivialGraph) {
  FlowGraph g = FlowGraph::build({"a"}, testing::NamedEdges{}, "a");
  EXPECT_TRUE(g.is_trivial());
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.name(g.source()), "a");
}

TEST(FlowGraphBuild, ValidTriangle) {
  FlowGraph g = make_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}}, "a");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(g.index_of("a"), g.index_of("c")));
  EXPECT_FALSE(g.has_edge(g.index_of("c"), g.index_of("a")));
}

TEST(FlowGraphBuild, RejectsMalformedInput) {
  EXPECT_EQ(build_error({"a", "b"}, {{"a", "b"}, {"a", "b"}}, "a"),
            GraphErrorKind::kParallelEdge);
  EXPECT_EQ(build_error({"a", "a"}, {}, "a"), GraphErrorKind::kDuplicateVertex);
  EXPECT_EQ(build_error({"a"}, {{"a", "a"}}, "a"), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(build_error({"a"}, {{"a", "z"}}, "a"), GraphErrorKind::kUnknownEndpoint);
  EXPECT_EQ(build_error({"a"}, {}, "s"), GraphErrorKind::kSourceMissing);
}

TEST(FlowGraphBuild, ErrorsCarryInputPosition) {
  try {
    FlowGraph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "b"}}, "a");
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::kParallelEdge);
    EXPECT_EQ(e.item(), 2u);
  }
}

TEST(FlowGraphBuild, IndicesFollowNameOrder) {
  FlowGraph g = make_graph({{"z", "m"}, {"m", "a"}}, "z");
  EXPECT_EQ(g.name(0), "a");
  EXPECT_EQ(g.name(1), "m");
  EXPECT_EQ(g.name(2), "z");
  EXPECT_EQ(g.source(), 2u);
  EXPECT_FALSE(g.find("q").has_value());
  EXPECT_THROW(g.index_of("q"), GraphError);
}

TEST(FlowGraphBuild, AdjacencyViewsAgree) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    FlowGraph g = testing::random_flow_graph(7, 0.3, rng);
    std::size_t in_total = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      auto preds = g.predecessors(v);
      auto ids = g.in_edge_ids(v);
      ASSERT_EQ(preds.size(), ids.size());
      for (std::size_t i = 0; i < preds.size(); ++i) {
        EXPECT_EQ(g.edges()[ids[i]], (Edge{preds[i], v}));
      }
      in_total += preds.size();
      for (VertexIndex w : g.successors(v)) EXPECT_TRUE(g.has_edge(v, w));
    }
    EXPECT_EQ(in_total, g.edge_count());
  }
}

TEST(Reachability, Examples) {
  EXPECT_TRUE(check_flow_reachability(make_graph({}, "a")));
  EXPECT_FALSE(check_flow_reachability(make_graph({}, "a", {"b"})));
  EXPECT_TRUE(check_flow_reachability(make_graph({{"a", "b"}, {"b", "c"}}, "a")));
}

TEST(CycleEdges, AcyclicGraphHasNone) {
  FlowGraph g = make_graph({{"v", "w"}, {"v", "t"}, {"w", "t"}}, "v");
  EXPECT_TRUE(detect_cycle_edges(g).empty());
}

TEST(CycleEdges, WhileShape) {
  FlowGraph g = make_graph({{"v", "w"}, {"w", "v"}, {"v", "t"}}, "v");
  CycleEdgeSet c = detect_cycle_edges(g);
  EXPECT_EQ(named_edges(g, c.edges(g)),
            (std::set<std::pair<std::string, std::string>>{{"w", "v"}}));
}

TEST(CycleEdges, IrreducibleGraphDependsOnChildOrder) {
  FlowGraph g = make_graph({{"s", "a"}, {"s", "b"}, {"a", "b"}, {"b", "a"}}, "s");
  CycleEdgeSet c = detect_cycle_edges(g);
  EXPECT_EQ(named_edges(g, c.edges(g)),
            (std::set<std::pair<std::string, std::string>>{{"b", "a"}}));

  const VertexIndex s = g.index_of("s");
  const VertexIndex a = g.index_of("a");
  const VertexIndex b = g.index_of("b");
  std::vector<std::vector<VertexIndex>> order(3);
  order[s] = {b, a};
  order[a] = {b};
  order[b] = {a};
  EXPECT_EQ(testing::dfs_back_edges(g, order), (std::set<Edge>{{a, b}}));
}

TEST(CycleEdges, MatchesReferenceDfsAndLeavesAcyclicRemainder) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    FlowGraph g = testing::random_flow_graph(2 + round % 9, 0.25, rng);
    std::vector<std::vector<VertexIndex>> sorted(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      sorted[v].assign(g.successors(v).begin(), g.successors(v).end());
    }
    CycleEdgeSet c = detect_cycle_edges(g);
    auto edges = c.edges(g);
    EXPECT_EQ(std::set<Edge>(edges.begin(), edges.end()),
              testing::dfs_back_edges(g, sorted));
    EXPECT_EQ(c, detect_cycle_edges(g));

    TopoOrder t = topo_sort(g, c);
    ASSERT_EQ(t.order.size(), g.vertex_count());
    for (std::size_t i = 0; i < t.order.size(); ++i) EXPECT_EQ(t.rank[t.order[i]], i);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (c.contains(e)) continue;
      EXPECT_LT(t.rank[g.edges()[e].from], t.rank[g.edges()[e].to]);
    }
  }
}

TEST(TopoSort, Examples) {
  FlowGraph chain = make_graph({{"a", "b"}, {"b", "c"}}, "a");
  TopoOrder t = topo_sort(chain, detect_cycle_edges(chain));
  EXPECT_EQ(t.order, (std::vector<VertexIndex>{0, 1, 2}));

  FlowGraph w = make_graph({{"v", "w"}, {"w", "v"}, {"v", "t"}}, "v");
  TopoOrder tw = topo_sort(w, detect_cycle_edges(w));
  std::vector<std::string> names;
  for (VertexIndex v : tw.order) names.push_back(w.name(v));
  EXPECT_EQ(names, (std::vector<std::string>{"v", "t", "w"}));

  FlowGraph trivial = make_graph({}, "a");
  EXPECT_EQ(topo_sort(trivial, detect_cycle_edges(trivial)).order,
            (std::vector<VertexIndex>{0}));
}

TEST(TopoSort, ThrowsWhenCyclesRemain) {
  FlowGraph g = make_graph({{"v", "w"}, {"w", "v"}, {"v", "t"}}, "v");
  try {
    topo_sort(g, CycleEdgeSet(std::vector<std::uint8_t>(g.edge_count(), 0)));
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::kCycleRemains);
  }
}

TEST(ScanStats, CountsTraversalWork) {
  FlowGraph g = testing::chain(10);
  ScanStats stats;
  CycleEdgeSet c = detect_cycle_edges(g, &stats);
  EXPECT_EQ(stats.edges_examined, g.edge_count());
  topo_sort(g, c, &stats);
  EXPECT_EQ(stats.edges_examined, 3 * g.edge_count());
}

}  // namespace
}  // namespace dgraph
