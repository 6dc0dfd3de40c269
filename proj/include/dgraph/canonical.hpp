// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Canonical integer-token codes for Dijkstra graphs. Every vertex starts as
// the token 1; when it becomes the source of a contracted prime its code is
// extended with the prime's type code followed by the codes of the other
// prime members (selection arms in lexicographic order, then the sink).
// Two Dijkstra graphs are isomorphic iff their codes are equal, and the
// 1-tokens at equal positions give the isomorphism.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dgraph/flow_graph.hpp"
#include "dgraph/recognizer.hpp"

namespace dgraph {

struct CanonicalCode {
  std::vector<std::uint32_t> tokens;
  // Parallel to tokens: the vertex a 1-token stands for, kNoVertex for
  // type tokens.
  std::vector<VertexIndex> provenance;

  std::size_t size() const { return tokens.size(); }
};

// "1 3 1 2 1 1"
std::string to_string(const CanonicalCode& code);
std::string format_tokens(const std::vector<std::uint32_t>& tokens);
// Inverse of format_tokens; throws std::invalid_argument.
std::vector<std::uint32_t> parse_tokens(std::string_view text);

class NotDijkstraError : public std::runtime_error {
 public:
  NotDijkstraError(int which, Verdict verdict)
      : std::runtime_error("graph " + std::to_string(which) +
                           " is not a Dijkstra graph: " + describe(verdict)),
        which_(which),
        verdict_(std::move(verdict)) {}

  // 1 or 2 for is_isomorphic; 1 for canonical_code.
  int which() const { return which_; }
  const Verdict& verdict() const { return verdict_; }

 private:
  int which_;
  Verdict verdict_;
};

// Recognition and coding fused into one pass.
struct Analysis {
  Verdict verdict;
  std::optional<CanonicalCode> code;  // present iff verdict is kDijkstra
};

Analysis analyze(const FlowGraph& g, ScanStats* stats = nullptr);

// Throws NotDijkstraError.
CanonicalCode canonical_code(const FlowGraph& g, ScanStats* stats = nullptr);

// image[v] is the vertex of the second graph that v maps to.
struct IsoMapping {
  std::vector<VertexIndex> image;
};

// Bijective, source-preserving and edge-preserving in both directions.
bool verify_isomorphism(const FlowGraph& g1, const FlowGraph& g2,
                        const IsoMapping& mapping);

// Pairs the 1-tokens of two equal codes; nullopt when the codes differ.
std::optional<IsoMapping> mapping_from_codes(const FlowGraph& g1,
                                             const CanonicalCode& c1,
                                             const FlowGraph& g2,
                                             const CanonicalCode& c2);

// Throws NotDijkstraError naming the offending graph.
std::optional<IsoMapping> is_isomorphic(const FlowGraph& g1,
                                        const FlowGraph& g2);

}  // namespace dgraph
