// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgraph/flow_graph.hpp"

namespace dgraph {

enum class Shape : std::uint8_t {
  kTrivial,
  kSequence,
  kIfThen,
  kWhile,
  kRepeat,
  kIfThenElse,
  kCase,  // p-way selection, p >= 3
};

// One of the structured-programming statement graphs. `arity` is the
// number of selection branches and is meaningful for kIfThenElse (2) and
// kCase (p >= 3) only.
struct StatementKind {
  Shape shape = Shape::kTrivial;
  std::uint32_t arity = 0;

  static constexpr StatementKind trivial() { return {Shape::kTrivial, 0}; }
  static constexpr StatementKind sequence() { return {Shape::kSequence, 0}; }
  static constexpr StatementKind if_then() { return {Shape::kIfThen, 0}; }
  static constexpr StatementKind while_loop() { return {Shape::kWhile, 0}; }
  static constexpr StatementKind repeat_loop() { return {Shape::kRepeat, 0}; }
  static constexpr StatementKind if_then_else() {
    return {Shape::kIfThenElse, 2};
  }
  // p >= 3; p == 2 is an if-then-else.
  static constexpr StatementKind selection(std::uint32_t p) {
    return p == 2 ? if_then_else() : StatementKind{Shape::kCase, p};
  }

  // Type code used by the canonical code: trivial 1, sequence 2, if-then 3,
  // while 4, repeat 5, if-then-else 6, p-case p + 4.
  std::uint32_t type_code() const;

  // Vertices added when a vertex is expanded into this statement graph.
  std::size_t added_vertices() const;
  std::size_t added_edges() const;

  bool is_selection() const {
    return shape == Shape::kIfThenElse || shape == Shape::kCase;
  }

  friend bool operator==(const StatementKind&, const StatementKind&) = default;
};

// "sequence", "if-then", "while", "repeat", "if-then-else", "case(4)".
std::string to_string(StatementKind kind);
// Accepts the to_string forms, plus "case" (arity 3) and "caseN".
std::optional<StatementKind> parse_statement_kind(std::string_view text);

// The statement graph itself over local vertex numbers: 0 is the source,
// 1..interior are the interior vertices, and the last vertex is the sink.
// `back_edge` is the loop edge for while/repeat.
struct StatementTemplate {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::optional<Edge> back_edge;
};

StatementTemplate statement_template(StatementKind kind);

}  // namespace dgraph
