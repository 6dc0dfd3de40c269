// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "reduction_pass.hpp"

namespace dgraph {
namespace {

struct TokenVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const {
    std::size_t h = key.size();
    for (std::uint32_t x : key) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Codes kept as a forest: each vertex owns a node whose expansion is
// 1 [type child...]. Children are vertices whose codes were final when the
// node was built. Structurally equal subtrees share an intern id, which
// lets comparisons skip them without expanding.
class CodeForest {
 public:
  explicit CodeForest(std::size_t n)
      : type_(n, 0), child_begin_(n, 0), child_count_(n, 0), intern_(n, 0) {}

  void add_prime(const PrimeMatch& prime) {
    const VertexIndex v = prime.source;
    std::vector<VertexIndex> interior = prime.interior();
    if (prime.kind.is_selection()) {
      std::sort(interior.begin(), interior.end(),
                [&](VertexIndex a, VertexIndex b) {
                  int c = compare(a, b);
                  return c != 0 ? c < 0 : a < b;
                });
    }
    type_[v] = prime.kind.type_code();
    child_begin_[v] = static_cast<std::uint32_t>(children_.size());
    children_.insert(children_.end(), interior.begin(), interior.end());
    children_.push_back(prime.sink);
    child_count_[v] = static_cast<std::uint32_t>(interior.size() + 1);

    std::vector<std::uint32_t> key{type_[v]};
    for (VertexIndex c : child_span(v)) key.push_back(intern_[c]);
    auto [it, inserted] = interned_.try_emplace(
        std::move(key), static_cast<std::uint32_t>(interned_.size() + 1));
    intern_[v] = it->second;
  }

  // Lexicographic comparison of the token sequences of two subtrees,
  // tokens compared as integers, a proper prefix ordering first.
  int compare(VertexIndex a, VertexIndex b) const {
    // Items: a subtree (is_token = false) or a pending token.
    struct Item {
      bool is_token;
      std::uint32_t value;
    };
    std::vector<Item> left{{false, a}};
    std::vector<Item> right{{false, b}};
    auto expand = [&](std::vector<Item>& stack) {
      const VertexIndex v = stack.back().value;
      stack.pop_back();
      auto kids = child_span(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        stack.push_back({false, *it});
      }
      if (type_[v] != 0) stack.push_back({true, type_[v]});
      stack.push_back({true, 1});
    };
    while (!left.empty() && !right.empty()) {
      const Item x = left.back();
      const Item y = right.back();
      if (!x.is_token && !y.is_token && intern_[x.value] == intern_[y.value]) {
        left.pop_back();
        right.pop_back();
        continue;
      }
      if (!x.is_token) {
        expand(left);
        continue;
      }
      if (!y.is_token) {
        expand(right);
        continue;
      }
      if (x.value != y.value) return x.value < y.value ? -1 : 1;
      left.pop_back();
      right.pop_back();
    }
    if (left.empty() && right.empty()) return 0;
    return left.empty() ? -1 : 1;
  }

  CanonicalCode emit(VertexIndex root) const {
    CanonicalCode code;
    std::vector<VertexIndex> stack{root};
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      code.tokens.push_back(1);
      code.provenance.push_back(v);
      if (type_[v] == 0) continue;
      code.tokens.push_back(type_[v]);
      code.provenance.push_back(kNoVertex);
      auto kids = child_span(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return code;
  }

 private:
  std::span<const VertexIndex> child_span(VertexIndex v) const {
    return {children_.data() + child_begin_[v], child_count_[v]};
  }

  std::vector<std::uint32_t> type_;  // 0 while the vertex is a leaf
  std::vector<std::uint32_t> child_begin_;
  std::vector<std::uint32_t> child_count_;
  std::vector<VertexIndex> children_;
  std::vector<std::uint32_t> intern_;  // 0 for leaves
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t,
                     TokenVectorHash>
      interned_;
};

}  // namespace

std::string format_tokens(const std::vector<std::uint32_t>& tokens) {
  std::string out;
  out.reserve(tokens.size() * 2);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(tokens[i]);
  }
  return out;
}

std::string to_string(const CanonicalCode& code) {
  return format_tokens(code.tokens);
}

std::vector<std::uint32_t> parse_tokens(std::string_view text) {
  std::vector<std::uint32_t> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0) {
      throw std::invalid_argument("malformed code token at offset " +
                                  std::to_string(i));
    }
    tokens.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return tokens;
}

Analysis analyze(const FlowGraph& g, ScanStats* stats) {
  CodeForest forest(g.vertex_count());
  Analysis result;
  result.verdict = internal::run_reduction_pass(
      g, stats, [&](const ReductionGraph&, const PrimeMatch& prime) {
        forest.add_prime(prime);
      });
  if (result.verdict.is_dijkstra()) result.code = forest.emit(g.source());
  return result;
}

CanonicalCode canonical_code(const FlowGraph& g, ScanStats* stats) {
  Analysis a = analyze(g, stats);
  if (!a.code) throw NotDijkstraError(1, std::move(a.verdict));
  return std::move(*a.code);
}

bool verify_isomorphism(const FlowGraph& g1, const FlowGraph& g2,
                        const IsoMapping& mapping) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      mapping.image.size() != n) {
    return false;
  }
  std::vector<std::uint8_t> hit(n, 0);
  for (VertexIndex v : mapping.image) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  if (mapping.image[g1.source()] != g2.source()) return false;
  // Injective on vertices and equal edge counts: one direction suffices.
  for (const Edge& e : g1.edges()) {
    if (!g2.has_edge(mapping.image[e.from], mapping.image[e.to])) return false;
  }
  return true;
}

std::optional<IsoMapping> mapping_from_codes(const FlowGraph& g1,
                                             const CanonicalCode& c1,
                                             const FlowGraph& g2,
                                             const CanonicalCode& c2) {
  if (c1.tokens != c2.tokens) return std::nullopt;
  IsoMapping mapping;
  mapping.image.assign(g1.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < c1.tokens.size(); ++i) {
    if (c1.provenance[i] != kNoVertex) {
      mapping.image[c1.provenance[i]] = c2.provenance[i];
    }
  }
  if (!verify_isomorphism(g1, g2, mapping)) {
    throw std::logic_error("equal codes produced a mapping that is not an isomorphism");
  }
  return mapping;
}

std::optional<IsoMapping> is_isomorphic(const FlowGraph& g1,
                                        const FlowGraph& g2) {
  Analysis a1 = analyze(g1);
  if (!a1.code) throw NotDijkstraError(1, std::move(a1.verdict));
  Analysis a2 = analyze(g2);
  if (!a2.code) throw NotDijkstraError(2, std::move(a2.verdict));
  return mapping_from_codes(g1, *a1.code, g2, *a2.code);
}

}  // namespace dgraph
