// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dgraph/flow_graph.hpp"
#include "dgraph/primes.hpp"
#include "dgraph/recognizer.hpp"

namespace dgraph::internal {

// The bottom-up pass shared by recognition and coding. `on_prime` sees each
// prime before it is contracted and must not retain the graph reference.
template <typename OnPrime>
Verdict run_reduction_pass(const FlowGraph& g, ScanStats* stats,
                           OnPrime&& on_prime) {
  Verdict verdict;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m + 1 >= 2 * n) {
    verdict.status = Status::kNotDijkstra;
    verdict.reason = Reason::kEdgeBoundExceeded;
    verdict.residual_vertices = n;
    return verdict;
  }

  std::size_t reached = 0;
  CycleEdgeSet cycles = detect_cycle_edges(g, stats, &reached);
  if (reached != n) {
    verdict.status = Status::kNotFlowGraph;
    verdict.reason = Reason::kUnreachable;
    verdict.residual_vertices = n;
    return verdict;
  }
  TopoOrder topo = topo_sort(g, cycles, stats);

  ReductionGraph work(g, cycles);
  if (stats) stats->edges_examined += m;
  for (std::size_t i = n; i-- > 0 && !work.is_trivial();) {
    const VertexIndex v = topo.order[i];
    if (!work.alive(v)) continue;
    auto prime = work.match_at(v, stats);
    if (!prime) continue;
    on_prime(static_cast<const ReductionGraph&>(work), *prime);
    work.contract(*prime, stats);
    verdict.trace.steps.push_back(std::move(*prime));
  }

  if (work.is_trivial()) {
    verdict.status = Status::kDijkstra;
  } else {
    verdict.status = Status::kNotDijkstra;
    verdict.reason = Reason::kStuckResidue;
    verdict.residual_vertices = work.vertex_count();
  }
  return verdict;
}

}  // namespace dgraph::internal
