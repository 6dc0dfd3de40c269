// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/flow_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace dgraph {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kDuplicateVertex: return "duplicate-vertex";
    case GraphErrorKind::kUnknownEndpoint: return "unknown-endpoint";
    case GraphErrorKind::kSelfLoop: return "self-loop";
    case GraphErrorKind::kParallelEdge: return "parallel-edge";
    case GraphErrorKind::kSourceMissing: return "source-missing";
    case GraphErrorKind::kUnknownVertex: return "unknown-vertex";
    case GraphErrorKind::kCycleRemains: return "cycle-remains";
    case GraphErrorKind::kInvalidMatch: return "invalid-match";
    case GraphErrorKind::kNameCollision: return "name-collision";
    case GraphErrorKind::kArityMismatch: return "arity-mismatch";
  }
  return "unknown";
}

FlowGraph FlowGraph::build(std::vector<std::string> names,
                           const std::vector<Edge>& edges,
                           VertexIndex source) {
  const std::size_t n = names.size();
  std::vector<VertexIndex> by_name(n);
  std::iota(by_name.begin(), by_name.end(), VertexIndex{0});
  std::sort(by_name.begin(), by_name.end(), [&](VertexIndex a, VertexIndex b) {
    int c = names[a].compare(names[b]);
    return c != 0 ? c < 0 : a < b;
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (names[by_name[i - 1]] == names[by_name[i]]) {
      throw GraphError(GraphErrorKind::kDuplicateVertex,
                       "duplicate vertex '" + names[by_name[i]] + "'",
                       by_name[i]);
    }
  }
  if (source >= n) {
    throw GraphError(GraphErrorKind::kSourceMissing,
                     "source is not a vertex of the graph");
  }

  std::vector<VertexIndex> new_index(n);
  for (std::size_t i = 0; i < n; ++i) new_index[by_name[i]] = i;

  // (edge, input position) so duplicates can be reported by position.
  std::vector<std::pair<Edge, std::size_t>> mapped;
  mapped.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.from >= n || e.to >= n) {
      throw GraphError(GraphErrorKind::kUnknownEndpoint,
                       "edge endpoint is not a vertex of the graph", i);
    }
    if (e.from == e.to) {
      throw GraphError(GraphErrorKind::kSelfLoop,
                       "self-loop on '" + names[e.from] + "'", i);
    }
    mapped.push_back({{new_index[e.from], new_index[e.to]}, i});
  }
  std::sort(mapped.begin(), mapped.end());
  for (std::size_t i = 1; i < mapped.size(); ++i) {
    if (mapped[i - 1].first == mapped[i].first) {
      const Edge& e = edges[mapped[i].second];
      throw GraphError(GraphErrorKind::kParallelEdge,
                       "parallel edge '" + names[e.from] + "' -> '" +
                           names[e.to] + "'",
                       mapped[i].second);
    }
  }

  FlowGraph g;
  g.source_ = new_index[source];
  g.names_.reserve(n);
  for (VertexIndex old : by_name) g.names_.push_back(std::move(names[old]));

  const std::size_t m = mapped.size();
  g.edges_.reserve(m);
  for (const auto& [e, pos] : mapped) g.edges_.push_back(e);

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.from + 1];
    ++g.in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_targets_.resize(m);
  g.in_sources_.resize(m);
  g.in_edge_ids_.resize(m);
  std::vector<EdgeIndex> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeIndex id = 0; id < m; ++id) {
    const Edge& e = g.edges_[id];
    g.out_targets_[id] = e.to;
    // Edges are sorted by source, so each in-list comes out sorted too.
    EdgeIndex slot = fill[e.to]++;
    g.in_sources_[slot] = e.from;
    g.in_edge_ids_[slot] = id;
  }
  return g;
}

FlowGraph FlowGraph::build(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::string& source) {
  std::vector<VertexIndex> order(names.size());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::sort(order.begin(), order.end(),
            [&](VertexIndex a, VertexIndex b) { return names[a] < names[b]; });
  auto lookup = [&](const std::string& name) -> VertexIndex {
    auto it = std::lower_bound(
        order.begin(), order.end(), name,
        [&](VertexIndex v, const std::string& key) { return names[v] < key; });
    if (it == order.end() || names[*it] != name) return kNoVertex;
    return *it;
  };

  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexIndex from = lookup(edges[i].first);
    VertexIndex to = lookup(edges[i].second);
    if (from == kNoVertex || to == kNoVertex) {
      const std::string& missing =
          from == kNoVertex ? edges[i].first : edges[i].second;
      throw GraphError(GraphErrorKind::kUnknownEndpoint,
                       "edge endpoint '" + missing + "' is not a vertex", i);
    }
    indexed.push_back({from, to});
  }
  VertexIndex src = lookup(source);
  if (src == kNoVertex) {
    // Duplicates take precedence so the reported error is the first one a
    // reader of the vertex list would notice.
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (names[order[i - 1]] == names[order[i]]) {
        throw GraphError(GraphErrorKind::kDuplicateVertex,
                         "duplicate vertex '" + names[order[i]] + "'",
                         order[i]);
      }
    }
    throw GraphError(GraphErrorKind::kSourceMissing,
                     "source '" + source + "' is not a vertex");
  }
  return build(std::move(names), indexed, src);
}

std::optional<VertexIndex> FlowGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex FlowGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw GraphError(GraphErrorKind::kUnknownVertex,
                   "no vertex named '" + std::string(name) + "'");
}

std::optional<EdgeIndex> FlowGraph::edge_id(VertexIndex from,
                                            VertexIndex to) const {
  auto succ = successors(from);
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) return std::nullopt;
  return out_offsets_[from] + static_cast<EdgeIndex>(it - succ.begin());
}

bool check_flow_reachability(const FlowGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexIndex> stack{g.source()};
  seen[g.source()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (VertexIndex w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

CycleEdgeSet::CycleEdgeSet(std::vector<std::uint8_t> flags)
    : flags_(std::move(flags)),
      count_(static_cast<std::size_t>(
          std::count_if(flags_.begin(), flags_.end(),
                        [](std::uint8_t f) { return f != 0; }))) {}

bool CycleEdgeSet::contains(const FlowGraph& g, VertexIndex from,
                            VertexIndex to) const {
  auto id = g.edge_id(from, to);
  return id && contains(*id);
}

std::vector<Edge> CycleEdgeSet::edges(const FlowGraph& g) const {
  std::vector<Edge> out;
  for (EdgeIndex e = 0; e < flags_.size(); ++e) {
    if (flags_[e]) out.push_back(g.edges()[e]);
  }
  return out;
}

CycleEdgeSet detect_cycle_edges(const FlowGraph& g, ScanStats* stats,
                                std::size_t* reached) {
  enum : std::uint8_t { kWhite, kOnStack, kDone };
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> flags(g.edge_count(), 0);
  std::vector<std::uint8_t> color(n, kWhite);
  // Frame: vertex and the next out-edge id to try.
  std::vector<std::pair<VertexIndex, EdgeIndex>> stack;
  std::size_t visited = 0;
  std::uint64_t scanned = 0;

  if (n > 0) {
    VertexIndex s = g.source();
    color[s] = kOnStack;
    ++visited;
    stack.push_back({s, g.out_begin(s)});
  }
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == g.out_begin(v + 1)) {
      color[v] = kDone;
      stack.pop_back();
      continue;
    }
    EdgeIndex e = next++;
    ++scanned;
    VertexIndex w = g.edges()[e].to;
    if (color[w] == kOnStack) {
      flags[e] = 1;
    } else if (color[w] == kWhite) {
      color[w] = kOnStack;
      ++visited;
      stack.push_back({w, g.out_begin(w)});
    }
  }
  if (stats) stats->edges_examined += scanned;
  if (reached) *reached = visited;
  return CycleEdgeSet(std::move(flags));
}

TopoOrder topo_sort(const FlowGraph& g, const CycleEdgeSet& cycles,
                    ScanStats* stats) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> indegree(n, 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!cycles.contains(e)) ++indegree[g.edges()[e].to];
  }
  std::priority_queue<VertexIndex, std::vector<VertexIndex>,
                      std::greater<VertexIndex>>
      ready;
  for (VertexIndex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }

  TopoOrder topo;
  topo.order.reserve(n);
  topo.rank.assign(n, 0);
  std::uint64_t scanned = g.edge_count();
  while (!ready.empty()) {
    VertexIndex v = ready.top();
    ready.pop();
    topo.rank[v] = static_cast<std::uint32_t>(topo.order.size());
    topo.order.push_back(v);
    for (EdgeIndex e = g.out_begin(v); e < g.out_begin(v + 1); ++e) {
      ++scanned;
      if (cycles.contains(e)) continue;
      if (--indegree[g.edges()[e].to] == 0) ready.push(g.edges()[e].to);
    }
  }
  if (stats) stats->edges_examined += scanned;
  if (topo.order.size() != n) {
    throw GraphError(GraphErrorKind::kCycleRemains,
                     "graph minus the cycle edges still contains a cycle");
  }
  return topo;
}

}  // namespace dgraph
