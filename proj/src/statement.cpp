// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/statement.hpp"

#include <charconv>

namespace dgraph {

std::uint32_t StatementKind::type_code() const {
  switch (shape) {
    case Shape::kTrivial: return 1;
    case Shape::kSequence: return 2;
    case Shape::kIfThen: return 3;
    case Shape::kWhile: return 4;
    case Shape::kRepeat: return 5;
    case Shape::kIfThenElse: return 6;
    case Shape::kCase: return arity + 4;
  }
  return 0;
}

std::size_t StatementKind::added_vertices() const {
  switch (shape) {
    case Shape::kTrivial: return 0;
    case Shape::kSequence: return 1;
    case Shape::kIfThen:
    case Shape::kWhile:
    case Shape::kRepeat: return 2;
    case Shape::kIfThenElse:
    case Shape::kCase: return arity + 1;
  }
  return 0;
}

std::size_t StatementKind::added_edges() const {
  switch (shape) {
    case Shape::kTrivial: return 0;
    case Shape::kSequence: return 1;
    case Shape::kIfThen:
    case Shape::kWhile:
    case Shape::kRepeat: return 3;
    case Shape::kIfThenElse:
    case Shape::kCase: return 2 * arity;
  }
  return 0;
}

std::string to_string(StatementKind kind) {
  switch (kind.shape) {
    case Shape::kTrivial: return "trivial";
    case Shape::kSequence: return "sequence";
    case Shape::kIfThen: return "if-then";
    case Shape::kWhile: return "while";
    case Shape::kRepeat: return "repeat";
    case Shape::kIfThenElse: return "if-then-else";
    case Shape::kCase: return "case(" + std::to_string(kind.arity) + ")";
  }
  return "?";
}

std::optional<StatementKind> parse_statement_kind(std::string_view text) {
  if (text == "trivial") return StatementKind::trivial();
  if (text == "sequence") return StatementKind::sequence();
  if (text == "if-then") return StatementKind::if_then();
  if (text == "while") return StatementKind::while_loop();
  if (text == "repeat") return StatementKind::repeat_loop();
  if (text == "if-then-else") return StatementKind::if_then_else();
  if (text == "case") return StatementKind::selection(3);
  if (text.substr(0, 4) != "case") return std::nullopt;
  std::string_view digits = text.substr(4);
  if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')') {
    digits = digits.substr(1, digits.size() - 2);
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p < 3) {
    return std::nullopt;
  }
  return StatementKind::selection(p);
}

StatementTemplate statement_template(StatementKind kind) {
  StatementTemplate t;
  switch (kind.shape) {
    case Shape::kTrivial:
      t.vertex_count = 1;
      break;
    case Shape::kSequence:
      t.vertex_count = 2;
      t.edges = {{0, 1}};
      break;
    case Shape::kIfThen:
      t.vertex_count = 3;
      t.edges = {{0, 1}, {0, 2}, {1, 2}};
      break;
    case Shape::kWhile:
      t.vertex_count = 3;
      t.edges = {{0, 1}, {0, 2}, {1, 0}};
      t.back_edge = Edge{1, 0};
      break;
    case Shape::kRepeat:
      t.vertex_count = 3;
      t.edges = {{0, 1}, {1, 0}, {1, 2}};
      t.back_edge = Edge{1, 0};
      break;
    case Shape::kIfThenElse:
    case Shape::kCase: {
      const VertexIndex sink = kind.arity + 1;
      t.vertex_count = kind.arity + 2;
      for (VertexIndex i = 1; i <= kind.arity; ++i) t.edges.push_back({0, i});
      for (VertexIndex i = 1; i <= kind.arity; ++i) t.edges.push_back({i, sink});
      break;
    }
  }
  return t;
}

}  // namespace dgraph
