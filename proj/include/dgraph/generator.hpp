// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Construction side: random Dijkstra graphs grown from the trivial graph
// by expanding expansible (X) vertices, and structural perturbations used
// to build negative corpora.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgraph/flow_graph.hpp"
#include "dgraph/statement.hpp"

namespace dgraph {

enum class VertexLabel : char { kExpansible = 'X', kRegular = 'R' };

struct ExpansionStep {
  std::string target;  // the expanded vertex; it becomes the source
  StatementKind kind;

  friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

struct ExpansionScript {
  std::uint64_t seed = 0;
  std::vector<ExpansionStep> steps;
  // Final labels, indexed like the generated graph's vertices.
  std::vector<VertexLabel> labels;
};

struct GeneratorOptions {
  // Relative weights of the six non-trivial shapes; a zero weight disables
  // a shape. Case arity is drawn uniformly from [case_min, case_max].
  double sequence = 1.0;
  double if_then = 1.0;
  double while_loop = 1.0;
  double repeat_loop = 1.0;
  double if_then_else = 1.0;
  double selection = 1.0;
  std::uint32_t case_min = 3;
  std::uint32_t case_max = 5;

  // Enables exactly the shapes of `kinds` with equal weight. A case kind
  // with a fixed arity pins both case bounds to it.
  static GeneratorOptions only(const std::vector<StatementKind>& kinds);
};

struct GeneratedGraph {
  FlowGraph graph;
  ExpansionScript script;
};

// Vertices are named v0, v1, ... in creation order; v0 is the source.
// Expands uniformly chosen X vertices until at least target_n vertices
// exist.
GeneratedGraph generate_dg(std::uint64_t seed, std::size_t target_n,
                           const GeneratorOptions& options = {});

// Rebuilds a generated graph from its script alone, through expand().
FlowGraph replay_script(const ExpansionScript& script);

enum class PerturbMode { kAddEdge, kDeleteEdge, kRedirectEdge, kAddCrossEntry };

const char* to_string(PerturbMode mode);

class PerturbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One random structural change that keeps the graph simple and its source
// in place. kAddCrossEntry adds an edge into a loop body from a vertex the
// source reaches without passing the loop header, which makes that loop
// multiple-entry. Throws PerturbError when no such change exists.
FlowGraph perturb(const FlowGraph& g, std::uint64_t seed, PerturbMode mode);

}  // namespace dgraph
