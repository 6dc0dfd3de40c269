// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Graph file formats.
//
// JSON (canonical):
//   {
//     "name": "g",
//     "source": "a",
//     "vertices": ["a", "b"],
//     "edges": [["a", "b"]],
//     "metadata": {"key": "value"}
//   }
// "metadata" is optional. Serialization sorts vertices, edges and metadata
// keys, so serialize(parse(x)) == x for any x that serialize produced.
//
// DOT subset: one `digraph` block with node statements, edge chains
// (`a -> b -> c`), attribute lists, and graph-level `key=value` statements
// (kept as metadata). The source is the single node with `source=true`.
// Other attributes are accepted and dropped. Undirected graphs, `--`
// edges and subgraphs are rejected.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgraph/flow_graph.hpp"
#include "dgraph/generator.hpp"

namespace dgraph {

enum class Format { kJson, kDot };

const char* to_string(Format format);
std::optional<Format> parse_format(std::string_view text);
// .json, .dot and .gv; nullopt for anything else.
std::optional<Format> format_for_path(const std::filesystem::path& path);

struct GraphDocument {
  std::string name;
  FlowGraph graph;
  std::vector<std::pair<std::string, std::string>> metadata;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kMissingSource, kInvalidGraph };

  // line is 1-based, 0 when the error has no line.
  ParseError(Kind kind, std::size_t line, const std::string& message,
             std::optional<GraphErrorKind> graph_kind = std::nullopt);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  // Set for kInvalidGraph: the validation rule that failed.
  std::optional<GraphErrorKind> graph_kind() const { return graph_kind_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::optional<GraphErrorKind> graph_kind_;
};

// Unreadable or unwritable files, unknown formats.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GraphDocument parse_graph(std::string_view text, Format format);
std::string serialize_graph(const GraphDocument& doc, Format format);

// Format inferred from the extension unless given.
GraphDocument read_graph_file(const std::filesystem::path& path,
                              std::optional<Format> format = std::nullopt);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Expansion scripts travel as JSON next to generated graphs:
//   {"seed": 7, "steps": [{"target": "v0", "kind": "while"}],
//    "labels": {"v0": "R", "v1": "X", "v2": "X"}}
std::string serialize_script(const ExpansionScript& script,
                             const FlowGraph& graph);
// Labels are dropped; replay_script recomputes the graph from the steps.
ExpansionScript parse_script(std::string_view text);

}  // namespace dgraph
