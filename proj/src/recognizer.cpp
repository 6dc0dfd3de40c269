// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/recognizer.hpp"

#include "reduction_pass.hpp"

namespace dgraph {

const char* to_string(Status status) {
  switch (status) {
    case Status::kDijkstra: return "DIJKSTRA";
    case Status::kNotDijkstra: return "NOT-DIJKSTRA";
    case Status::kNotFlowGraph: return "NOT-FLOW-GRAPH";
  }
  return "?";
}

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::kNone: return "none";
    case Reason::kEdgeBoundExceeded: return "edge-bound-exceeded";
    case Reason::kStuckResidue: return "stuck-residue";
    case Reason::kUnreachable: return "unreachable";
    case Reason::kMalformedInput: return "malformed-input";
  }
  return "?";
}

std::string describe(const Verdict& verdict) {
  std::string text = to_string(verdict.reason);
  switch (verdict.reason) {
    case Reason::kStuckResidue:
      text += " (" + std::to_string(verdict.residual_vertices) +
              " vertices left)";
      break;
    case Reason::kEdgeBoundExceeded:
      text += " (m >= 2n-1)";
      break;
    case Reason::kUnreachable:
      text += " (some vertex is not reachable from the source)";
      break;
    default:
      break;
  }
  return text;
}

Verdict recognize(const FlowGraph& g, ScanStats* stats) {
  return internal::run_reduction_pass(
      g, stats, [](const ReductionGraph&, const PrimeMatch&) {});
}

FlowGraph replay(const FlowGraph& g, const ContractionTrace& trace) {
  ReductionGraph work(g, detect_cycle_edges(g));
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const PrimeMatch& step = trace.steps[i];
    std::optional<PrimeMatch> found;
    if (step.source < g.vertex_count()) found = work.match_at(step.source);
    if (!found || found->kind != step.kind || found->sink != step.sink ||
        found->members != step.members) {
      throw ReplayError(i, "step " + std::to_string(i) + " (" +
                               to_string(step.kind) +
                               ") is not a prime of the current graph");
    }
    work.contract(*found);
  }
  return work.snapshot().first;
}

}  // namespace dgraph
