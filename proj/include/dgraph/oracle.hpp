// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference for the reduction. It shares no code with the
// recognizer: primes are found by comparing induced subgraphs against the
// statement shapes and checking closedness literally, cycle edges are
// recomputed by a fresh DFS in every state, and every contraction order is
// explored. The graph's source may belong to a prime only as that prime's
// source. All maximal contraction sequences must agree on their end
// state's triviality and on their length; a disagreement is an error.

#include <cstddef>
#include <stdexcept>

#include "dgraph/flow_graph.hpp"

namespace dgraph {

struct OracleOptions {
  std::size_t max_vertices = 12;  // hard limit 64
  std::size_t max_states = 2'000'000;
};

struct OracleResult {
  bool reducible = false;  // some (hence every) maximal sequence ends trivial
  std::size_t contractions = 0;
  std::size_t states = 0;  // distinct graphs visited
};

class OracleError : public std::runtime_error {
 public:
  enum class Kind { kTooLarge, kSearchBudgetExceeded, kDivergence };
  OracleError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

OracleResult oracle_reduce(const FlowGraph& g, const OracleOptions& options = {});

}  // namespace dgraph
