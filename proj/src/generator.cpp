// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/generator.hpp"

#include <algorithm>
#include <random>

#include "dgraph/primes.hpp"

namespace dgraph {
namespace {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }

// Adjacency under construction; vertices are numbered in creation order.
class ExpansionBuilder {
 public:
  VertexIndex add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return static_cast<VertexIndex>(out_.size() - 1);
  }

  std::size_t size() const { return out_.size(); }

  // Returns the new vertices in template order.
  std::vector<VertexIndex> expand(VertexIndex x, StatementKind kind) {
    const StatementTemplate shape = statement_template(kind);
    std::vector<VertexIndex> placed{x};
    for (std::size_t i = 1; i < shape.vertex_count; ++i) {
      placed.push_back(add_vertex());
    }
    const VertexIndex sink = placed.back();
    for (VertexIndex y : out_[x]) {
      std::replace(in_[y].begin(), in_[y].end(), x, sink);
    }
    out_[sink] = std::move(out_[x]);
    out_[x].clear();
    for (const Edge& e : shape.edges) {
      out_[placed[e.from]].push_back(placed[e.to]);
      in_[placed[e.to]].push_back(placed[e.from]);
    }
    return {placed.begin() + 1, placed.end()};
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> all;
    for (VertexIndex v = 0; v < out_.size(); ++v) {
      for (VertexIndex w : out_[v]) all.push_back({v, w});
    }
    return all;
  }

 private:
  std::vector<std::vector<VertexIndex>> out_;
  std::vector<std::vector<VertexIndex>> in_;
};

// Vertices the source reaches without entering `blocked`.
std::vector<std::uint8_t> reach_avoiding(const FlowGraph& g,
                                         VertexIndex blocked) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  if (g.source() == blocked) return seen;
  std::vector<VertexIndex> stack{g.source()};
  seen[g.source()] = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (VertexIndex w : g.successors(v)) {
      if (w != blocked && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Natural loop of the back edge tail -> header.
std::vector<std::uint8_t> loop_body(const FlowGraph& g, VertexIndex tail,
                                    VertexIndex header) {
  std::vector<std::uint8_t> body(g.vertex_count(), 0);
  body[header] = 1;
  if (body[tail]) return body;
  body[tail] = 1;
  std::vector<VertexIndex> stack{tail};
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (VertexIndex u : g.predecessors(v)) {
      if (!body[u]) {
        body[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return body;
}

FlowGraph with_edges(const FlowGraph& g, std::vector<Edge> edges) {
  std::vector<std::string> names(g.names().begin(), g.names().end());
  return FlowGraph::build(std::move(names), edges, g.source());
}

}  // namespace

GeneratorOptions GeneratorOptions::only(const std::vector<StatementKind>& kinds) {
  GeneratorOptions o;
  o.sequence = o.if_then = o.while_loop = o.repeat_loop = o.if_then_else =
      o.selection = 0.0;
  for (const StatementKind& k : kinds) {
    switch (k.shape) {
      case Shape::kTrivial: break;
      case Shape::kSequence: o.sequence = 1.0; break;
      case Shape::kIfThen: o.if_then = 1.0; break;
      case Shape::kWhile: o.while_loop = 1.0; break;
      case Shape::kRepeat: o.repeat_loop = 1.0; break;
      case Shape::kIfThenElse: o.if_then_else = 1.0; break;
      case Shape::kCase:
        o.selection = 1.0;
        o.case_min = o.case_max = k.arity;
        break;
    }
  }
  return o;
}

GeneratedGraph generate_dg(std::uint64_t seed, std::size_t target_n,
                           const GeneratorOptions& options) {
  if (target_n == 0) throw std::invalid_argument("target_n must be >= 1");
  if (options.case_min < 3 || options.case_max < options.case_min) {
    throw std::invalid_argument("case arity range must satisfy 3 <= min <= max");
  }
  const std::vector<double> weights{options.sequence,     options.if_then,
                                    options.while_loop,   options.repeat_loop,
                                    options.if_then_else, options.selection};
  const Shape shapes[] = {Shape::kSequence, Shape::kIfThen,
                          Shape::kWhile,    Shape::kRepeat,
                          Shape::kIfThenElse, Shape::kCase};
  if (std::none_of(weights.begin(), weights.end(),
                   [](double w) { return w > 0.0; })) {
    throw std::invalid_argument("all statement kinds are disabled");
  }

  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> pick_shape(weights.begin(), weights.end());
  std::uniform_int_distribution<std::uint32_t> pick_arity(options.case_min,
                                                          options.case_max);

  GeneratedGraph out;
  out.script.seed = seed;
  ExpansionBuilder builder;
  std::vector<VertexLabel> labels;
  std::vector<VertexIndex> expansible;
  builder.add_vertex();
  labels.push_back(VertexLabel::kExpansible);
  expansible.push_back(0);

  // Every expansion relabels one X vertex and adds at least one, so the
  // X pool never runs dry.
  while (builder.size() < target_n) {
    std::uniform_int_distribution<std::size_t> pick_vertex(
        0, expansible.size() - 1);
    const std::size_t slot = pick_vertex(rng);
    const VertexIndex x = expansible[slot];
    expansible[slot] = expansible.back();
    expansible.pop_back();

    const Shape shape = shapes[pick_shape(rng)];
    StatementKind kind{shape, 0};
    if (shape == Shape::kIfThenElse) kind = StatementKind::if_then_else();
    if (shape == Shape::kCase) kind = StatementKind::selection(pick_arity(rng));

    labels[x] = VertexLabel::kRegular;
    for (VertexIndex fresh : builder.expand(x, kind)) {
      labels.push_back(VertexLabel::kExpansible);
      expansible.push_back(fresh);
    }
    out.script.steps.push_back({vertex_name(x), kind});
  }

  std::vector<std::string> names;
  names.reserve(builder.size());
  for (std::size_t i = 0; i < builder.size(); ++i) names.push_back(vertex_name(i));
  out.graph = FlowGraph::build(names, builder.edges(), 0);
  out.script.labels.assign(builder.size(), VertexLabel::kRegular);
  for (std::size_t i = 0; i < names.size(); ++i) {
    out.script.labels[out.graph.index_of(names[i])] = labels[i];
  }
  return out;
}

FlowGraph replay_script(const ExpansionScript& script) {
  FlowGraph g = FlowGraph::build({vertex_name(0)}, std::vector<Edge>{}, 0);
  std::size_t next = 1;
  for (const ExpansionStep& step : script.steps) {
    std::vector<std::string> fresh;
    for (std::size_t i = 0; i < step.kind.added_vertices(); ++i) {
      fresh.push_back(vertex_name(next++));
    }
    g = expand(g, g.index_of(step.target), step.kind, fresh);
  }
  return g;
}

const char* to_string(PerturbMode mode) {
  switch (mode) {
    case PerturbMode::kAddEdge: return "add-edge";
    case PerturbMode::kDeleteEdge: return "delete-edge";
    case PerturbMode::kRedirectEdge: return "redirect-edge";
    case PerturbMode::kAddCrossEntry: return "add-cross-entry";
  }
  return "?";
}

FlowGraph perturb(const FlowGraph& g, std::uint64_t seed, PerturbMode mode) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw PerturbError("cannot perturb a trivial graph");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto uniform = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng);
  };

  switch (mode) {
    case PerturbMode::kAddEdge: {
      std::vector<Edge> missing;
      for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex w = 0; w < n; ++w) {
          if (u != w && !g.has_edge(u, w)) missing.push_back({u, w});
        }
      }
      if (missing.empty()) throw PerturbError("graph is complete");
      edges.push_back(missing[uniform(missing.size())]);
      return with_edges(g, std::move(edges));
    }
    case PerturbMode::kDeleteEdge: {
      if (edges.empty()) throw PerturbError("graph has no edges");
      edges.erase(edges.begin() + uniform(edges.size()));
      return with_edges(g, std::move(edges));
    }
    case PerturbMode::kRedirectEdge: {
      std::vector<std::pair<std::size_t, VertexIndex>> options;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (VertexIndex x = 0; x < n; ++x) {
          if (x != edges[i].from && x != edges[i].to &&
              !g.has_edge(edges[i].from, x)) {
            options.push_back({i, x});
          }
        }
      }
      if (options.empty()) throw PerturbError("no edge can be redirected");
      auto [i, x] = options[uniform(options.size())];
      edges[i].to = x;
      return with_edges(g, std::move(edges));
    }
    case PerturbMode::kAddCrossEntry: {
      const CycleEdgeSet cycles = detect_cycle_edges(g);
      std::vector<Edge> entries;
      for (const Edge& back : cycles.edges(g)) {
        const VertexIndex header = back.to;
        auto body = loop_body(g, back.from, header);
        auto outside = reach_avoiding(g, header);
        for (VertexIndex z = 0; z < n; ++z) {
          if (!outside[z] || body[z]) continue;
          for (VertexIndex y = 0; y < n; ++y) {
            if (body[y] && y != header && !g.has_edge(z, y)) {
              entries.push_back({z, y});
            }
          }
        }
      }
      std::sort(entries.begin(), entries.end());
      entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
      if (entries.empty()) {
        throw PerturbError("no loop can be entered around its header");
      }
      edges.push_back(entries[uniform(entries.size())]);
      return with_edges(g, std::move(edges));
    }
  }
  throw PerturbError("unknown perturbation");
}

}  // namespace dgraph
