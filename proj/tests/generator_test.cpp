// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <gtest/gtest.h>

#include "dgraph/generator.hpp"
#include "dgraph/oracle.hpp"
#include "dgraph/recognizer.hpp"
#include "support/test_graphs.hpp"

namespace dgraph {
namespace {

using testing::make_graph;
using testing::named_edges;

TEST(Generator, SizeOneIsTrivial) {
  GeneratedGraph out = generate_dg(7, 1);
  EXPECT_TRUE(out.graph.is_trivial());
  EXPECT_EQ(out.graph.name(0), "v0");
  EXPECT_TRUE(out.script.steps.empty());
  EXPECT_EQ(out.script.labels, std::vector<VertexLabel>{VertexLabel::kExpansible});
}

TEST(Generator, ForcedWhileLoop) {
  GeneratedGraph out =
      generate_dg(1, 3, GeneratorOptions::only({StatementKind::while_loop()}));
  EXPECT_EQ(named_edges(out.graph),
            (std::set<std::pair<std::string, std::string>>{
                {"v0", "v1"}, {"v1", "v0"}, {"v0", "v2"}}));
  ASSERT_EQ(out.script.steps.size(), 1u);
  EXPECT_EQ(out.script.steps[0], (ExpansionStep{"v0", StatementKind::while_loop()}));
  const FlowGraph& g = out.graph;
  EXPECT_EQ(out.script.labels[g.index_of("v0")], VertexLabel::kRegular);
  EXPECT_EQ(out.script.labels[g.index_of("v1")], VertexLabel::kExpansible);
  EXPECT_EQ(out.script.labels[g.index_of("v2")], VertexLabel::kExpansible);
}

TEST(Generator, ForcedCaseArity) {
  GeneratedGraph out =
      generate_dg(4, 30, GeneratorOptions::only({StatementKind::selection(4)}));
  for (const ExpansionStep& step : out.script.steps) {
    EXPECT_EQ(step.kind, StatementKind::selection(4));
  }
}

TEST(Generator, RejectsBadOptions) {
  EXPECT_THROW(generate_dg(0, 0), std::invalid_argument);
  EXPECT_THROW(generate_dg(0, 5, GeneratorOptions::only({})), std::invalid_argument);
  GeneratorOptions o;
  o.case_min = 2;
  EXPECT_THROW(generate_dg(0, 5, o), std::invalid_argument);
}

TEST(Generator, IsDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratedGraph a = generate_dg(seed, 40);
    GeneratedGraph b = generate_dg(seed, 40);
    EXPECT_EQ(named_edges(a.graph), named_edges(b.graph));
    EXPECT_EQ(a.script.steps, b.script.steps);
  }
  EXPECT_NE(named_edges(generate_dg(1, 40).graph), named_edges(generate_dg(2, 40).graph));
}

TEST(GeneratorProperties, ScriptAccountsForEveryVertexAndEdge) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t target = 1 + seed % 90;
    GeneratedGraph out = generate_dg(seed, target);
    const FlowGraph& g = out.graph;
    std::size_t n = 1;
    std::size_t m = 0;
    for (const ExpansionStep& step : out.script.steps) {
      n += step.kind.added_vertices();
      m += step.kind.added_edges();
    }
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.edge_count(), m);
    EXPECT_GE(n, target);
    EXPECT_LE(g.edge_count() + 2, 2 * g.vertex_count());

    Verdict v = recognize(g);
    ASSERT_TRUE(v.is_dijkstra()) << "seed " << seed;
    EXPECT_EQ(v.trace.size(), out.script.steps.size());

    FlowGraph replayed = replay_script(out.script);
    EXPECT_EQ(named_edges(replayed), named_edges(g));
    EXPECT_EQ(replayed.source(), g.source());

    // X vertices were never expanded; R vertices were expanded exactly once.
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      const auto expanded = std::count_if(
          out.script.steps.begin(), out.script.steps.end(),
          [&](const ExpansionStep& s) { return s.target == g.name(u); });
      EXPECT_EQ(expanded, out.script.labels[u] == VertexLabel::kRegular ? 1 : 0);
    }
  }
}

TEST(Perturb, KeepsGraphsSimpleAndSourceFixed) {
  const PerturbMode modes[] = {PerturbMode::kAddEdge, PerturbMode::kDeleteEdge,
                               PerturbMode::kRedirectEdge,
                               PerturbMode::kAddCrossEntry};
  std::size_t changed = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FlowGraph g = generate_dg(seed, 2 + seed % 30).graph;
    for (PerturbMode mode : modes) {
      FlowGraph h;
      try {
        h = perturb(g, seed, mode);
      } catch (const PerturbError&) {
        continue;
      }
      // FlowGraph::build already rejects loops and duplicates.
      EXPECT_EQ(h.vertex_count(), g.vertex_count());
      EXPECT_EQ(h.name(h.source()), g.name(g.source()));
      EXPECT_NE(named_edges(h), named_edges(g));
      const std::size_t m = g.edge_count();
      switch (mode) {
        case PerturbMode::kAddEdge:
        case PerturbMode::kAddCrossEntry: EXPECT_EQ(h.edge_count(), m + 1); break;
        case PerturbMode::kDeleteEdge: EXPECT_EQ(h.edge_count(), m - 1); break;
        case PerturbMode::kRedirectEdge: EXPECT_EQ(h.edge_count(), m); break;
      }
      if (mode == PerturbMode::kAddCrossEntry) {
        EXPECT_FALSE(recognize(h).is_dijkstra());
      }
      ++changed;
    }
  }
  EXPECT_GT(changed, 300u);
}

TEST(Perturb, Errors) {
  EXPECT_THROW(perturb(make_graph({}, "a"), 0, PerturbMode::kAddEdge), PerturbError);
  FlowGraph acyclic = make_graph({{"a", "b"}, {"b", "c"}}, "a");
  EXPECT_THROW(perturb(acyclic, 0, PerturbMode::kAddCrossEntry), PerturbError);
  FlowGraph complete = make_graph({{"a", "b"}, {"b", "a"}}, "a");
  EXPECT_THROW(perturb(complete, 0, PerturbMode::kAddEdge), PerturbError);
  EXPECT_STREQ(to_string(PerturbMode::kRedirectEdge), "redirect-edge");
}

TEST(Oracle, Examples) {
  OracleResult trivial = oracle_reduce(make_graph({}, "a"));
  EXPECT_TRUE(trivial.reducible);
  EXPECT_EQ(trivial.contractions, 0u);

  OracleResult four = oracle_reduce(
      make_graph({{"v", "w"}, {"v", "t"}, {"w", "x"}, {"x", "t"}}, "v"));
  EXPECT_TRUE(four.reducible);
  EXPECT_EQ(four.contractions, 2u);

  EXPECT_FALSE(oracle_reduce(make_graph({{"s", "a"}, {"s", "b"}, {"a", "b"},
                                         {"b", "a"}, {"a", "t"}, {"b", "t"}},
                                        "s"))
                   .reducible);
}

TEST(Oracle, Limits) {
  try {
    oracle_reduce(testing::chain(13));
    FAIL();
  } catch (const OracleError& e) {
    EXPECT_EQ(e.kind(), OracleError::Kind::kTooLarge);
  }
  OracleOptions tight;
  tight.max_states = 2;
  try {
    oracle_reduce(testing::chain(8), tight);
    FAIL();
  } catch (const OracleError& e) {
    EXPECT_EQ(e.kind(), OracleError::Kind::kSearchBudgetExceeded);
  }
  OracleOptions wide;
  wide.max_vertices = 20;
  EXPECT_TRUE(oracle_reduce(testing::chain(13), wide).reducible);
}

}  // namespace
}  // namespace dgraph
