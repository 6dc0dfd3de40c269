// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Prime subgraphs: induced, closed copies of a non-trivial statement graph.
// Detection is rooted at a candidate source vertex; contraction coalesces a
// prime into its source, which keeps its vertex identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgraph/flow_graph.hpp"
#include "dgraph/statement.hpp"

namespace dgraph {

struct PrimeMatch {
  StatementKind kind;
  VertexIndex source = kNoVertex;
  VertexIndex sink = kNoVertex;
  // Sorted ascending.
  std::vector<VertexIndex> members;
  // Out-neighbours of the source inside the prime: the body or branch
  // vertices first (selection arms ascending), then the sink when the sink
  // is itself an out-neighbour of the source.
  std::vector<VertexIndex> branches;

  // Members other than the source and the sink.
  std::vector<VertexIndex> interior() const;

  friend bool operator==(const PrimeMatch&, const PrimeMatch&) = default;
};

// Mutable working copy used while a graph is reduced. Vertex indices are
// those of the original FlowGraph; a contracted prime survives as its
// source index. Cycle-edge flags travel with the edges: in-edges of the
// source and out-edges of the sink keep their status, internal edges
// disappear.
class ReductionGraph {
 public:
  ReductionGraph(const FlowGraph& g, const CycleEdgeSet& cycles);

  const FlowGraph& original() const { return *original_; }
  std::size_t vertex_count() const { return live_vertices_; }
  std::size_t edge_count() const { return live_edges_; }
  bool is_trivial() const { return live_vertices_ == 1; }
  bool alive(VertexIndex v) const { return alive_[v] != 0; }
  // Image of the original source.
  VertexIndex source() const { return source_; }

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }
  VertexIndex origin(EdgeIndex e) const { return edges_[e].from; }
  VertexIndex target(EdgeIndex e) const { return edges_[e].to; }
  bool is_cycle_edge(EdgeIndex e) const { return cycle_[e] != 0; }
  std::uint32_t cycle_in_degree(VertexIndex v) const { return cycle_in_[v]; }
  bool has_edge(VertexIndex from, VertexIndex to) const;

  // The prime rooted at v, if any. At most one statement shape can match.
  std::optional<PrimeMatch> match_at(VertexIndex v,
                                     ScanStats* stats = nullptr) const;

  // Coalesces a prime previously returned by match_at on this graph.
  void contract(const PrimeMatch& prime, ScanStats* stats = nullptr);

  std::vector<VertexIndex> live_vertices() const;
  // Current graph as a standalone FlowGraph (names of surviving vertices)
  // together with the maintained cycle-edge flags.
  std::pair<FlowGraph, CycleEdgeSet> snapshot() const;

 private:
  std::optional<PrimeMatch> match_single_exit(VertexIndex v,
                                              std::uint64_t& scanned) const;
  std::optional<PrimeMatch> match_two_way(VertexIndex v,
                                          std::uint64_t& scanned) const;
  std::optional<PrimeMatch> match_selection(VertexIndex v,
                                            std::uint64_t& scanned) const;
  bool only_successor_is(VertexIndex v, VertexIndex w) const;
  bool sink_points_to(VertexIndex sink, VertexIndex v,
                      std::uint64_t& scanned) const;

  const FlowGraph* original_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> cycle_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::vector<std::uint32_t> cycle_in_;
  std::vector<std::uint8_t> alive_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
  VertexIndex source_ = kNoVertex;
};

// Functional forms over immutable graphs. Vertex indices in a PrimeMatch
// refer to the graph it was matched in.
std::optional<PrimeMatch> match_prime_at(const FlowGraph& g,
                                         const CycleEdgeSet& cycles,
                                         VertexIndex v);

// Throws GraphError(kInvalidMatch) when `prime` is not the prime at its
// source in g. The contracted graph keeps the prime source's name.
std::pair<FlowGraph, CycleEdgeSet> contract(const FlowGraph& g,
                                            const CycleEdgeSet& cycles,
                                            const PrimeMatch& prime);

// Replaces v by the statement graph of `kind`; v becomes its source and the
// sink takes over v's out-edges. `fresh_names` supplies the new vertices in
// template order (interior vertices, then the sink).
// Throws GraphError(kNameCollision | kArityMismatch | kUnknownVertex).
FlowGraph expand(const FlowGraph& g, VertexIndex v, StatementKind kind,
                 const std::vector<std::string>& fresh_names);

}  // namespace dgraph
