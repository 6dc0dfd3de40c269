// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Flow graphs: simple digraphs with a distinguished source, plus the
// traversal primitives every later stage builds on (reachability, DFS
// cycle edges, topological order of the acyclic remainder).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgraph {

// Dense vertex handle. Indices follow ascending vertex-name order, so any
// "ascending name" tie-break is an ascending index tie-break.
using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
inline constexpr VertexIndex kNoVertex = static_cast<VertexIndex>(-1);
inline constexpr std::size_t kNoItem = static_cast<std::size_t>(-1);

struct Edge {
  VertexIndex from = kNoVertex;
  VertexIndex to = kNoVertex;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  kDuplicateVertex,
  kUnknownEndpoint,
  kSelfLoop,
  kParallelEdge,
  kSourceMissing,
  kUnknownVertex,
  kCycleRemains,
  kInvalidMatch,
  kNameCollision,
  kArityMismatch,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  // `item` is the position of the offending vertex or edge in the caller's
  // input lists, or kNoItem when the error is not tied to one.
  GraphError(GraphErrorKind kind, const std::string& what,
             std::size_t item = kNoItem)
      : std::runtime_error(what), kind_(kind), item_(item) {}

  GraphErrorKind kind() const { return kind_; }
  std::size_t item() const { return item_; }

 private:
  GraphErrorKind kind_;
  std::size_t item_;
};

// Counts adjacency entries touched by the traversal and reduction routines.
struct ScanStats {
  std::uint64_t edges_examined = 0;
};

class FlowGraph {
 public:
  // Empty placeholder; only graphs returned by build() are valid.
  FlowGraph() = default;

  // Validates and builds. Edge endpoints index into `names`.
  static FlowGraph build(std::vector<std::string> names,
                         const std::vector<Edge>& edges, VertexIndex source);

  // Name-based convenience form.
  static FlowGraph build(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::string& source);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_trivial() const { return names_.size() == 1; }
  VertexIndex source() const { return source_; }

  const std::string& name(VertexIndex v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexIndex> find(std::string_view name) const;
  // Throws GraphError(kUnknownVertex).
  VertexIndex index_of(std::string_view name) const;

  // Successors in ascending index order.
  std::span<const VertexIndex> successors(VertexIndex v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexIndex> predecessors(VertexIndex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  // Edge ids of v's in-edges, aligned with predecessors(v).
  std::span<const EdgeIndex> in_edge_ids(VertexIndex v) const {
    return {in_edge_ids_.data() + in_offsets_[v],
            in_edge_ids_.data() + in_offsets_[v + 1]};
  }
  // Edge ids are positions in edges(); out-edges of v are the contiguous
  // range [out_begin(v), out_begin(v + 1)).
  EdgeIndex out_begin(VertexIndex v) const { return out_offsets_[v]; }

  // Sorted by (from, to).
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeIndex> edge_id(VertexIndex from, VertexIndex to) const;
  bool has_edge(VertexIndex from, VertexIndex to) const {
    return edge_id(from, to).has_value();
  }

  friend bool operator==(const FlowGraph& a, const FlowGraph& b) {
    return a.source_ == b.source_ && a.names_ == b.names_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<EdgeIndex> out_offsets_;
  std::vector<VertexIndex> out_targets_;
  std::vector<EdgeIndex> in_offsets_;
  std::vector<VertexIndex> in_sources_;
  std::vector<EdgeIndex> in_edge_ids_;
  VertexIndex source_ = kNoVertex;
};

// True iff every vertex is reachable from the source.
bool check_flow_reachability(const FlowGraph& g);

// Cycle (back) edges of one depth-first search from the source, tracked as
// flags over the graph's edge ids.
class CycleEdgeSet {
 public:
  CycleEdgeSet() = default;
  explicit CycleEdgeSet(std::vector<std::uint8_t> flags);

  bool contains(EdgeIndex e) const { return e < flags_.size() && flags_[e]; }
  bool contains(const FlowGraph& g, VertexIndex from, VertexIndex to) const;
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::span<const std::uint8_t> flags() const { return flags_; }
  std::vector<Edge> edges(const FlowGraph& g) const;

  friend bool operator==(const CycleEdgeSet& a, const CycleEdgeSet& b) {
    return a.flags_ == b.flags_;
  }

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

// DFS from the source visiting children in ascending name order. Vertices
// not reachable from the source contribute no cycle edges. When `reached`
// is given it receives the number of vertices the search visited.
CycleEdgeSet detect_cycle_edges(const FlowGraph& g, ScanStats* stats = nullptr,
                                std::size_t* reached = nullptr);

struct TopoOrder {
  std::vector<VertexIndex> order;
  std::vector<std::uint32_t> rank;  // inverse of order
};

// Kahn's algorithm on g minus `cycles`, ties broken by ascending name.
// Throws GraphError(kCycleRemains) if the remainder is not acyclic.
TopoOrder topo_sort(const FlowGraph& g, const CycleEdgeSet& cycles,
                    ScanStats* stats = nullptr);

}  // namespace dgraph
