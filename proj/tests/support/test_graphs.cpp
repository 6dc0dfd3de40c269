// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/test_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace dgraph::testing {

FlowGraph make_graph(const NamedEdges& edges, const std::string& source,
                     const std::vector<std::string>& extra) {
  std::set<std::string> names(extra.begin(), extra.end());
  names.insert(source);
  for (const auto& [a, b] : edges) {
    names.insert(a);
    names.insert(b);
  }
  return FlowGraph::build({names.begin(), names.end()}, edges, source);
}

FlowGraph chain(std::size_t n) {
  auto name = [](std::size_t i) {
    std::string digits = std::to_string(i);
    return "a" + std::string(4 - std::min<std::size_t>(4, digits.size()), '0') + digits;
  };
  std::vector<std::string> names;
  NamedEdges edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(name(i));
    if (i) edges.emplace_back(name(i - 1), name(i));
  }
  return FlowGraph::build(names, edges, name(0));
}

std::set<std::pair<std::string, std::string>> named_edges(
    const FlowGraph& g, const std::vector<Edge>& edges) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : edges) out.emplace(g.name(e.from), g.name(e.to));
  return out;
}

std::set<std::pair<std::string, std::string>> named_edges(const FlowGraph& g) {
  return named_edges(g, {g.edges().begin(), g.edges().end()});
}

std::set<Edge> dfs_back_edges(
    const FlowGraph& g, const std::vector<std::vector<VertexIndex>>& child_order) {
  enum Colour { kWhite, kGrey, kBlack };
  std::vector<Colour> colour(g.vertex_count(), kWhite);
  std::set<Edge> back;
  std::function<void(VertexIndex)> visit = [&](VertexIndex v) {
    colour[v] = kGrey;
    for (VertexIndex w : child_order[v]) {
      if (colour[w] == kGrey) {
        back.insert({v, w});
      } else if (colour[w] == kWhite) {
        visit(w);
      }
    }
    colour[v] = kBlack;
  };
  visit(g.source());
  return back;
}

std::size_t for_each_child_order(
    const FlowGraph& g,
    const std::function<bool(const std::vector<std::vector<VertexIndex>>&)>& f) {
  std::vector<std::vector<VertexIndex>> order(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto succ = g.successors(v);
    order[v].assign(succ.begin(), succ.end());
  }
  std::size_t visited = 0;
  while (true) {
    ++visited;
    if (!f(order)) return visited;
    // Odometer over next_permutation; each wheel wraps back to sorted.
    std::size_t v = 0;
    while (v < order.size() &&
           !std::next_permutation(order[v].begin(), order[v].end())) {
      ++v;
    }
    if (v == order.size()) return visited;
  }
}

bool brute_force_isomorphic(const FlowGraph& a, const FlowGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const FlowGraph& g, VertexIndex v) {
    return std::pair{g.successors(v).size(), g.predecessors(v).size()};
  };
  std::vector<VertexIndex> image(n, kNoVertex);
  std::vector<bool> used(n, false);
  // Assign vertices of `a` in index order, checking edges to already
  // assigned vertices as we go.
  std::function<bool(VertexIndex)> assign = [&](VertexIndex v) -> bool {
    if (v == n) return true;
    for (VertexIndex w = 0; w < n; ++w) {
      if (used[w] || degrees(a, v) != degrees(b, w)) continue;
      if ((v == a.source()) != (w == b.source())) continue;
      bool ok = true;
      for (VertexIndex u = 0; u < v && ok; ++u) {
        ok = a.has_edge(u, v) == b.has_edge(image[u], w) &&
             a.has_edge(v, u) == b.has_edge(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (assign(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return assign(0);
}

Renamed random_rename(const FlowGraph& g, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Renamed r;
  for (std::size_t v = 0; v < n; ++v) r.image.push_back("n" + std::to_string(perm[v]));
  NamedEdges edges;
  for (const Edge& e : g.edges()) edges.emplace_back(r.image[e.from], r.image[e.to]);
  r.graph = FlowGraph::build(r.image, edges, r.image[g.source()]);
  return r;
}

FlowGraph random_flow_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  std::set<Edge> edges;
  // Vertex i > 0 hangs off a random earlier vertex, so u0 reaches all.
  for (VertexIndex i = 1; i < n; ++i) {
    std::uniform_int_distribution<VertexIndex> parent(0, i - 1);
    edges.insert({parent(rng), i});
  }
  std::bernoulli_distribution coin(p);
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex w = 0; w < n; ++w) {
      if (u != w && coin(rng)) edges.insert({u, w});
    }
  }
  return FlowGraph::build(names, {edges.begin(), edges.end()}, 0);
}

}  // namespace dgraph::testing
