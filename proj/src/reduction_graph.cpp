// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cassert>

#include "dgraph/primes.hpp"

namespace dgraph {

ReductionGraph::ReductionGraph(const FlowGraph& g, const CycleEdgeSet& cycles)
    : original_(&g),
      edges_(g.edges().begin(), g.edges().end()),
      cycle_(g.edge_count(), 0),
      out_(g.vertex_count()),
      in_(g.vertex_count()),
      cycle_in_(g.vertex_count(), 0),
      alive_(g.vertex_count(), 1),
      live_vertices_(g.vertex_count()),
      live_edges_(g.edge_count()),
      source_(g.source()) {
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    if (cycles.contains(e)) {
      cycle_[e] = 1;
      ++cycle_in_[edges_[e].to];
    }
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out_[v].reserve(g.successors(v).size());
    for (EdgeIndex e = g.out_begin(v); e < g.out_begin(v + 1); ++e) {
      out_[v].push_back(e);
    }
    auto ids = g.in_edge_ids(v);
    in_[v].assign(ids.begin(), ids.end());
  }
}

bool ReductionGraph::has_edge(VertexIndex from, VertexIndex to) const {
  if (!alive(from) || !alive(to)) return false;
  return std::any_of(out_[from].begin(), out_[from].end(),
                     [&](EdgeIndex e) { return edges_[e].to == to; });
}

void ReductionGraph::contract(const PrimeMatch& prime, ScanStats* stats) {
  const VertexIndex v = prime.source;
  const VertexIndex t = prime.sink;
  assert(alive(v) && alive(t) && v != t);
  std::uint64_t scanned = 0;

  // Every out-edge of the source and of the interior stays inside the
  // prime; the sink's out-edges are all external.
  std::size_t internal = out_[v].size();
  scanned += out_[v].size();
  for (VertexIndex u : prime.members) {
    if (u == v || u == t) continue;
    internal += out_[u].size();
    scanned += out_[u].size();
  }

  if (prime.kind.shape == Shape::kWhile || prime.kind.shape == Shape::kRepeat) {
    auto& in = in_[v];
    scanned += in.size();
    auto keep = std::remove_if(in.begin(), in.end(), [&](EdgeIndex e) {
      if (!std::binary_search(prime.members.begin(), prime.members.end(),
                              edges_[e].from)) {
        return false;
      }
      if (cycle_[e]) --cycle_in_[v];
      return true;
    });
    in.erase(keep, in.end());
  }

  out_[v] = std::move(out_[t]);
  for (EdgeIndex e : out_[v]) edges_[e].from = v;
  scanned += out_[v].size();

  for (VertexIndex u : prime.members) {
    if (u == v) continue;
    alive_[u] = 0;
    std::vector<EdgeIndex>().swap(out_[u]);
    std::vector<EdgeIndex>().swap(in_[u]);
    if (source_ == u) source_ = v;
  }
  live_vertices_ -= prime.members.size() - 1;
  live_edges_ -= internal;
  if (stats) stats->edges_examined += scanned;
}

std::vector<VertexIndex> ReductionGraph::live_vertices() const {
  std::vector<VertexIndex> out;
  out.reserve(live_vertices_);
  for (VertexIndex v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::pair<FlowGraph, CycleEdgeSet> ReductionGraph::snapshot() const {
  std::vector<VertexIndex> live = live_vertices();
  std::vector<VertexIndex> local(alive_.size(), kNoVertex);
  std::vector<std::string> names;
  names.reserve(live.size());
  for (VertexIndex v : live) {
    local[v] = static_cast<VertexIndex>(names.size());
    names.push_back(original_->name(v));
  }
  std::vector<Edge> edges;
  std::vector<Edge> cyclic;
  edges.reserve(live_edges_);
  for (VertexIndex v : live) {
    for (EdgeIndex e : out_[v]) {
      Edge mapped{local[v], local[edges_[e].to]};
      edges.push_back(mapped);
      if (cycle_[e]) cyclic.push_back(mapped);
    }
  }
  // Live names are already in ascending order, so local indices survive
  // the rebuild unchanged.
  FlowGraph g = FlowGraph::build(std::move(names), edges, local[source_]);
  std::vector<std::uint8_t> flags(g.edge_count(), 0);
  for (const Edge& e : cyclic) flags[*g.edge_id(e.from, e.to)] = 1;
  return {std::move(g), CycleEdgeSet(std::move(flags))};
}

}  // namespace dgraph
