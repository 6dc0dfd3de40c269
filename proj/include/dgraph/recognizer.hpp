// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Recognition of structured-program flow graphs: one descending pass over a
// topological order of the graph minus its cycle edges, contracting each
// prime found at the current vertex. The pass succeeds iff the graph
// collapses to a single vertex; the contracted primes form the witness.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgraph/flow_graph.hpp"
#include "dgraph/primes.hpp"

namespace dgraph {

enum class Status { kDijkstra, kNotDijkstra, kNotFlowGraph };

enum class Reason {
  kNone,
  kEdgeBoundExceeded,
  kStuckResidue,
  kUnreachable,
  kMalformedInput,
};

const char* to_string(Status status);  // "DIJKSTRA", "NOT-DIJKSTRA", ...
const char* to_string(Reason reason);

// Contracting primes in order; indices refer to the recognized graph.
struct ContractionTrace {
  std::vector<PrimeMatch> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

struct Verdict {
  Status status = Status::kNotDijkstra;
  Reason reason = Reason::kNone;
  // Vertices left when the pass got stuck.
  std::size_t residual_vertices = 0;
  // Complete for kDijkstra, partial for a stuck pass.
  ContractionTrace trace;

  bool is_dijkstra() const { return status == Status::kDijkstra; }
};

// Human-readable reason, e.g. "stuck-residue (4 vertices left)".
std::string describe(const Verdict& verdict);

Verdict recognize(const FlowGraph& g, ScanStats* stats = nullptr);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Re-validates and applies each recorded contraction; returns the final
// graph. Throws ReplayError at the first step that does not match.
FlowGraph replay(const FlowGraph& g, const ContractionTrace& trace);

}  // namespace dgraph
