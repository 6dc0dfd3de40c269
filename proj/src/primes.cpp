// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/primes.hpp"

#include <algorithm>
#include <unordered_set>

namespace dgraph {

std::vector<VertexIndex> PrimeMatch::interior() const {
  std::vector<VertexIndex> out;
  for (VertexIndex u : members) {
    if (u != source && u != sink) out.push_back(u);
  }
  return out;
}

namespace {

PrimeMatch make_match(StatementKind kind, VertexIndex source, VertexIndex sink,
                      std::vector<VertexIndex> interior,
                      std::vector<VertexIndex> branches) {
  PrimeMatch m{kind, source, sink, std::move(interior), std::move(branches)};
  m.members.push_back(source);
  m.members.push_back(sink);
  std::sort(m.members.begin(), m.members.end());
  return m;
}

}  // namespace

bool ReductionGraph::only_successor_is(VertexIndex v, VertexIndex w) const {
  return out_[v].size() == 1 && edges_[out_[v][0]].to == w;
}

bool ReductionGraph::sink_points_to(VertexIndex sink, VertexIndex v,
                                    std::uint64_t& scanned) const {
  scanned += out_[sink].size();
  return std::any_of(out_[sink].begin(), out_[sink].end(),
                     [&](EdgeIndex e) { return edges_[e].to == v; });
}

// Out-degree 1 at v: sequence or repeat.
std::optional<PrimeMatch> ReductionGraph::match_single_exit(
    VertexIndex v, std::uint64_t& scanned) const {
  const VertexIndex w = edges_[out_[v][0]].to;
  ++scanned;
  if (in_[w].size() != 1) return std::nullopt;

  EdgeIndex back = static_cast<EdgeIndex>(-1);
  scanned += out_[w].size();
  for (EdgeIndex e : out_[w]) {
    if (edges_[e].to == v) back = e;
  }
  if (back == static_cast<EdgeIndex>(-1)) {
    if (cycle_in_[v] != 0) return std::nullopt;
    return make_match(StatementKind::sequence(), v, w, {}, {w});
  }

  // Repeat: v -> w, w -> v (cycle edge), w -> t.
  if (!cycle_[back] || cycle_in_[v] != 1 || out_[w].size() != 2) {
    return std::nullopt;
  }
  const EdgeIndex exit = out_[w][0] == back ? out_[w][1] : out_[w][0];
  const VertexIndex t = edges_[exit].to;
  ++scanned;
  if (in_[t].size() != 1) return std::nullopt;
  if (sink_points_to(t, v, scanned)) return std::nullopt;
  return make_match(StatementKind::repeat_loop(), v, t, {w}, {w});
}

// Out-degree 2 at v: if-then, while or if-then-else.
std::optional<PrimeMatch> ReductionGraph::match_two_way(
    VertexIndex v, std::uint64_t& scanned) const {
  const VertexIndex a = edges_[out_[v][0]].to;
  const VertexIndex b = edges_[out_[v][1]].to;
  scanned += 2;

  for (auto [w, t] : {std::pair{a, b}, std::pair{b, a}}) {
    if (in_[w].size() != 1 || !only_successor_is(w, t)) continue;
    ++scanned;
    // If-then: v -> w, v -> t, w -> t.
    if (in_[t].size() != 2 || cycle_in_[v] != 0) return std::nullopt;
    if (sink_points_to(t, v, scanned)) return std::nullopt;
    return make_match(StatementKind::if_then(), v, t, {w}, {w, t});
  }

  for (auto [w, t] : {std::pair{a, b}, std::pair{b, a}}) {
    if (in_[w].size() != 1 || !only_successor_is(w, v)) continue;
    ++scanned;
    // While: v -> w, w -> v (cycle edge), v -> t.
    if (!cycle_[out_[w][0]] || cycle_in_[v] != 1) return std::nullopt;
    if (in_[t].size() != 1) return std::nullopt;
    if (sink_points_to(t, v, scanned)) return std::nullopt;
    return make_match(StatementKind::while_loop(), v, t, {w}, {w, t});
  }

  return match_selection(v, scanned);
}

// If-then-else or p-case: v -> w_i -> t for every branch w_i.
std::optional<PrimeMatch> ReductionGraph::match_selection(
    VertexIndex v, std::uint64_t& scanned) const {
  if (cycle_in_[v] != 0) return std::nullopt;
  const std::size_t p = out_[v].size();
  VertexIndex t = kNoVertex;
  std::vector<VertexIndex> arms;
  arms.reserve(p);
  for (EdgeIndex e : out_[v]) {
    const VertexIndex w = edges_[e].to;
    scanned += 2;
    if (in_[w].size() != 1 || out_[w].size() != 1) return std::nullopt;
    const VertexIndex next = edges_[out_[w][0]].to;
    if (t == kNoVertex) {
      t = next;
    } else if (next != t) {
      return std::nullopt;
    }
    arms.push_back(w);
  }
  if (t == v || in_[t].size() != p) return std::nullopt;
  if (sink_points_to(t, v, scanned)) return std::nullopt;
  std::sort(arms.begin(), arms.end());
  return make_match(StatementKind::selection(static_cast<std::uint32_t>(p)), v,
                    t, arms, arms);
}

std::optional<PrimeMatch> ReductionGraph::match_at(VertexIndex v,
                                                   ScanStats* stats) const {
  if (v >= alive_.size() || !alive(v)) return std::nullopt;
  std::uint64_t scanned = out_[v].size();
  std::optional<PrimeMatch> found;
  switch (out_[v].size()) {
    case 0: break;
    case 1: found = match_single_exit(v, scanned); break;
    case 2: found = match_two_way(v, scanned); break;
    default: found = match_selection(v, scanned); break;
  }
  // Every in-edge of a non-source member is internal, and only the loop
  // edge into the source may be a cycle edge. A cycle edge into another
  // member means the prime would swallow a loop header, in particular the
  // graph's own source.
  if (found) {
    for (VertexIndex u : found->members) {
      if (u != v && cycle_in_[u] != 0) {
        found.reset();
        break;
      }
    }
  }
  if (stats) stats->edges_examined += scanned;
  return found;
}

std::optional<PrimeMatch> match_prime_at(const FlowGraph& g,
                                         const CycleEdgeSet& cycles,
                                         VertexIndex v) {
  if (v >= g.vertex_count()) {
    throw GraphError(GraphErrorKind::kUnknownVertex,
                     "vertex index out of range");
  }
  ReductionGraph work(g, cycles);
  return work.match_at(v);
}

std::pair<FlowGraph, CycleEdgeSet> contract(const FlowGraph& g,
                                            const CycleEdgeSet& cycles,
                                            const PrimeMatch& prime) {
  ReductionGraph work(g, cycles);
  std::optional<PrimeMatch> found;
  if (prime.source < g.vertex_count()) found = work.match_at(prime.source);
  if (!found || found->kind != prime.kind || found->sink != prime.sink ||
      found->members != prime.members) {
    throw GraphError(GraphErrorKind::kInvalidMatch,
                     "no such prime at the given source");
  }
  work.contract(*found);
  return work.snapshot();
}

FlowGraph expand(const FlowGraph& g, VertexIndex v, StatementKind kind,
                 const std::vector<std::string>& fresh_names) {
  if (v >= g.vertex_count()) {
    throw GraphError(GraphErrorKind::kUnknownVertex,
                     "vertex index out of range");
  }
  if (fresh_names.size() != kind.added_vertices() ||
      (kind.shape == Shape::kCase && kind.arity < 3) ||
      (kind.shape == Shape::kIfThenElse && kind.arity != 2)) {
    throw GraphError(GraphErrorKind::kArityMismatch,
                     to_string(kind) + " needs " +
                         std::to_string(kind.added_vertices()) +
                         " fresh vertices, got " +
                         std::to_string(fresh_names.size()));
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < fresh_names.size(); ++i) {
    if (g.find(fresh_names[i]) || !seen.insert(fresh_names[i]).second) {
      throw GraphError(GraphErrorKind::kNameCollision,
                       "fresh name '" + fresh_names[i] + "' is already taken",
                       i);
    }
  }
  if (kind.shape == Shape::kTrivial) return g;

  const StatementTemplate shape = statement_template(kind);
  const std::size_t n = g.vertex_count();
  auto place = [&](VertexIndex local) -> VertexIndex {
    return local == 0 ? v : static_cast<VertexIndex>(n + local - 1);
  };
  const VertexIndex sink = place(static_cast<VertexIndex>(shape.vertex_count - 1));

  std::vector<std::string> names(g.names().begin(), g.names().end());
  names.insert(names.end(), fresh_names.begin(), fresh_names.end());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + shape.edges.size());
  for (const Edge& e : g.edges()) {
    edges.push_back(e.from == v ? Edge{sink, e.to} : e);
  }
  for (const Edge& e : shape.edges) edges.push_back({place(e.from), place(e.to)});
  return FlowGraph::build(std::move(names), edges, g.source());
}

}  // namespace dgraph
