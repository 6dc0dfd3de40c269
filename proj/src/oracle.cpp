// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dgraph {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<unsigned>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Adjacency-bitmask graph; vertex ids are those of the input graph.
struct State {
  Mask alive = 0;
  unsigned source = 0;
  std::vector<Mask> out;

  std::vector<Mask> key() const {
    std::vector<Mask> k{alive, source};
    k.insert(k.end(), out.begin(), out.end());
    return k;
  }
};

std::vector<Mask> in_rows(const State& s) {
  std::vector<Mask> in(s.out.size(), 0);
  for_each_bit(s.alive, [&](unsigned u) {
    for_each_bit(s.out[u], [&](unsigned w) { in[w] |= bit(u); });
  });
  return in;
}

// Back edges of a DFS from the source, children in ascending id order.
std::vector<Mask> back_edges(const State& s) {
  std::vector<Mask> back(s.out.size(), 0);
  Mask on_stack = 0;
  Mask visited = 0;
  std::vector<std::pair<unsigned, Mask>> stack;
  stack.push_back({s.source, s.out[s.source]});
  on_stack |= bit(s.source);
  visited |= bit(s.source);
  while (!stack.empty()) {
    auto& [v, todo] = stack.back();
    if (todo == 0) {
      on_stack &= ~bit(v);
      stack.pop_back();
      continue;
    }
    const unsigned w = static_cast<unsigned>(std::countr_zero(todo));
    todo &= todo - 1;
    if (on_stack & bit(w)) {
      back[v] |= bit(w);
    } else if (!(visited & bit(w))) {
      visited |= bit(w);
      on_stack |= bit(w);
      stack.push_back({w, s.out[w]});
    }
  }
  return back;
}

// Whether the subgraph induced by `members` is one of the statement shapes
// with source v and sink t.
bool matches_statement(const State& s, const std::vector<Mask>& back, Mask members,
                       unsigned v, unsigned t) {
  auto induced = [&](unsigned x) { return s.out[x] & members; };
  if (induced(t) != 0) return false;
  const Mask interior = members & ~bit(v) & ~bit(t);
  const int p = std::popcount(interior);
  if (p == 0) return induced(v) == bit(t);
  if (p == 1) {
    const unsigned w = static_cast<unsigned>(std::countr_zero(interior));
    const bool loop_edge = (back[w] & bit(v)) != 0;
    // if-then
    if (induced(v) == (bit(w) | bit(t)) && induced(w) == bit(t)) return true;
    // while
    if (induced(v) == (bit(w) | bit(t)) && induced(w) == bit(v) && loop_edge) {
      return true;
    }
    // repeat
    return induced(v) == bit(w) && induced(w) == (bit(v) | bit(t)) && loop_edge;
  }
  // if-then-else and p-case
  if (induced(v) != interior) return false;
  bool ok = true;
  for_each_bit(interior, [&](unsigned w) { ok = ok && induced(w) == bit(t); });
  return ok;
}

bool is_closed(const State& s, const std::vector<Mask>& in,
               const std::vector<Mask>& back, Mask members, unsigned v,
               unsigned t) {
  // Expansion never moves the graph's source off the source of the
  // statement it belongs to, so no prime may swallow it.
  if ((members & bit(s.source)) && v != s.source) return false;
  bool ok = true;
  for_each_bit(members, [&](unsigned x) {
    if (x != v && (in[x] & ~members)) ok = false;
    if (x != t && (s.out[x] & ~members)) ok = false;
  });
  if (!ok) return false;
  // Cycle edges entering the source must come from its out-neighbours.
  for_each_bit(s.alive, [&](unsigned u) {
    if ((back[u] & bit(v)) && !(s.out[v] & bit(u))) ok = false;
  });
  return ok;
}

std::vector<std::pair<Mask, unsigned>> primes_of(const State& s) {
  const std::vector<Mask> in = in_rows(s);
  const std::vector<Mask> back = back_edges(s);
  std::set<std::pair<Mask, unsigned>> found;
  for_each_bit(s.alive, [&](unsigned v) {
    const Mask succ = s.out[v];
    Mask reach2 = succ;
    for_each_bit(succ, [&](unsigned w) { reach2 |= s.out[w]; });
    reach2 &= ~bit(v);
    for_each_bit(reach2, [&](unsigned t) {
      for (Mask members : {bit(v) | bit(t), bit(v) | succ | bit(t)}) {
        if (found.count({members, v})) continue;
        if (matches_statement(s, back, members, v, t) &&
            is_closed(s, in, back, members, v, t)) {
          found.insert({members, v});
        }
      }
    });
  });
  return {found.begin(), found.end()};
}

State contract_state(const State& s, Mask members, unsigned v) {
  State next = s;
  Mask merged_out = 0;
  for_each_bit(members, [&](unsigned x) { merged_out |= s.out[x]; });
  for_each_bit(s.alive & ~members, [&](unsigned a) {
    if (s.out[a] & members) next.out[a] = (s.out[a] & ~members) | bit(v);
  });
  for_each_bit(members, [&](unsigned x) { next.out[x] = 0; });
  // Coalescing drops loops and parallel edges.
  next.out[v] = merged_out & ~members;
  next.alive = s.alive & ~(members & ~bit(v));
  return next;
}

struct Outcome {
  bool trivial = false;
  std::size_t k = 0;
};

class Search {
 public:
  explicit Search(const OracleOptions& options) : options_(options) {}

  Outcome solve(const State& s) {
    auto key = s.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states) {
      throw OracleError(OracleError::Kind::kSearchBudgetExceeded,
                        "oracle state budget exhausted");
    }
    Outcome result{std::popcount(s.alive) == 1, 0};
    bool first = true;
    for (const auto& [members, v] : primes_of(s)) {
      Outcome child = solve(contract_state(s, members, v));
      Outcome here{child.trivial, child.k + 1};
      if (first) {
        result = here;
        first = false;
      } else if (here.trivial != result.trivial || here.k != result.k) {
        throw OracleError(OracleError::Kind::kDivergence,
                          "maximal contraction sequences disagree");
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  OracleOptions options_;
  std::map<std::vector<Mask>, Outcome> memo_;
};

}  // namespace

OracleResult oracle_reduce(const FlowGraph& g, const OracleOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || n > options.max_vertices || n > 64) {
    throw OracleError(OracleError::Kind::kTooLarge,
                      "graph has " + std::to_string(n) +
                          " vertices, oracle limit is " +
                          std::to_string(std::min<std::size_t>(
                              options.max_vertices, 64)));
  }
  State start;
  start.alive = n == 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1;
  start.source = g.source();
  start.out.assign(n, 0);
  for (const Edge& e : g.edges()) start.out[e.from] |= bit(e.to);

  Search search(options);
  Outcome outcome = search.solve(start);
  return {outcome.trivial, outcome.k, search.states()};
}

}  // namespace dgraph
