// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Corpus analysis: recognize and code many graphs at once, then group the
// graphs by code. analyze_all spreads the graphs over OpenMP threads;
// analyze_all_serial is the single-threaded reference it must agree with.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgraph/canonical.hpp"
#include "dgraph/graph_io.hpp"

namespace dgraph {

struct BatchInput {
  std::string name;
  std::optional<FlowGraph> graph;  // absent when loading failed
  std::string load_error;
};

struct AnalysisEntry {
  std::string name;
  std::string status;  // DIJKSTRA, NOT-DIJKSTRA, NOT-FLOW-GRAPH, INPUT-ERROR
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t contractions = 0;  // witness length for DIJKSTRA
  std::optional<CanonicalCode> code;
  std::string diagnostic;  // empty for DIJKSTRA

  bool is_dijkstra() const { return code.has_value(); }
};

std::vector<AnalysisEntry> analyze_all(std::span<const BatchInput> inputs);
std::vector<AnalysisEntry> analyze_all_serial(std::span<const BatchInput> inputs);

// Every graph file (.json, .dot, .gv) directly inside `dir`, sorted by file
// name. Files that fail to load become inputs carrying the error.
std::vector<BatchInput> load_directory(const std::filesystem::path& dir,
                                       std::optional<Format> format = std::nullopt);

struct Cluster {
  std::string key;  // code line, or the diagnostic of an unrecognized graph
  bool is_code = false;
  std::vector<std::string> names;  // sorted
};

struct PairMapping {
  std::string first;
  std::string second;
  std::vector<std::pair<std::string, std::string>> pairs;  // v -> v'
};

struct SimilarityReport {
  std::vector<AnalysisEntry> entries;  // sorted by name
  // Code clusters in token order, then one singleton per unrecognized
  // graph in name order.
  std::vector<Cluster> clusters;
  std::vector<PairMapping> mappings;  // first member against each other one
};

// `graphs` must be aligned with `entries` when mappings are requested.
SimilarityReport build_report(std::vector<AnalysisEntry> entries,
                              std::span<const BatchInput> graphs = {},
                              bool with_mappings = false);

std::string report_to_json(const SimilarityReport& report);

}  // namespace dgraph
