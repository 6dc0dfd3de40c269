// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/batch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace dgraph {
namespace {

AnalysisEntry analyze_one(const BatchInput& input) {
  AnalysisEntry entry;
  entry.name = input.name;
  if (!input.graph) {
    entry.status = "INPUT-ERROR";
    entry.diagnostic = input.load_error;
    return entry;
  }
  const FlowGraph& g = *input.graph;
  entry.vertices = g.vertex_count();
  entry.edges = g.edge_count();
  Analysis a = analyze(g);
  entry.status = to_string(a.verdict.status);
  if (a.code) {
    entry.contractions = a.verdict.trace.size();
    entry.code = std::move(a.code);
  } else {
    entry.diagnostic = describe(a.verdict);
  }
  return entry;
}

}  // namespace

std::vector<AnalysisEntry> analyze_all(std::span<const BatchInput> inputs) {
  std::vector<AnalysisEntry> entries(inputs.size());
  const auto count = static_cast<std::ptrdiff_t>(inputs.size());
  // Graph sizes vary widely, so hand out work dynamically.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    entries[i] = analyze_one(inputs[i]);
  }
  return entries;
}

std::vector<AnalysisEntry> analyze_all_serial(std::span<const BatchInput> inputs) {
  std::vector<AnalysisEntry> entries;
  entries.reserve(inputs.size());
  for (const BatchInput& input : inputs) entries.push_back(analyze_one(input));
  return entries;
}

std::vector<BatchInput> load_directory(const std::filesystem::path& dir,
                                       std::optional<Format> format) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (!item.is_regular_file()) continue;
    auto detected = format_for_path(item.path());
    if (!detected) continue;
    if (format && *detected != *format) continue;
    files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BatchInput> inputs(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    inputs[i].name = files[i].filename().string();
    try {
      inputs[i].graph = read_graph_file(files[i], format).graph;
    } catch (const std::runtime_error& e) {
      inputs[i].load_error = e.what();
    }
  }
  return inputs;
}

SimilarityReport build_report(std::vector<AnalysisEntry> entries,
                              std::span<const BatchInput> graphs,
                              bool with_mappings) {
  if (with_mappings && graphs.size() != entries.size()) {
    throw std::invalid_argument("mappings need the graphs of every entry");
  }
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].name < entries[b].name;
  });

  SimilarityReport report;
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_code;
  for (std::size_t i : order) {
    if (entries[i].code) by_code[entries[i].code->tokens].push_back(i);
  }
  for (const auto& [tokens, members] : by_code) {
    Cluster c;
    c.key = format_tokens(tokens);
    c.is_code = true;
    for (std::size_t i : members) c.names.push_back(entries[i].name);
    report.clusters.push_back(std::move(c));

    if (!with_mappings) continue;
    const std::size_t head = members.front();
    for (std::size_t j = 1; j < members.size(); ++j) {
      const std::size_t other = members[j];
      const FlowGraph& g1 = *graphs[head].graph;
      const FlowGraph& g2 = *graphs[other].graph;
      auto mapping =
          mapping_from_codes(g1, *entries[head].code, g2, *entries[other].code);
      PairMapping pm{entries[head].name, entries[other].name, {}};
      for (VertexIndex v = 0; v < g1.vertex_count(); ++v) {
        pm.pairs.emplace_back(g1.name(v), g2.name(mapping->image[v]));
      }
      report.mappings.push_back(std::move(pm));
    }
  }
  for (std::size_t i : order) {
    if (entries[i].code) continue;
    report.clusters.push_back({entries[i].diagnostic, false, {entries[i].name}});
  }
  for (std::size_t i : order) report.entries.push_back(std::move(entries[i]));
  return report;
}

std::string report_to_json(const SimilarityReport& report) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["entries"] = Json::array();
  for (const AnalysisEntry& e : report.entries) {
    Json item;
    item["name"] = e.name;
    item["status"] = e.status;
    if (e.status != "INPUT-ERROR") {
      item["vertices"] = e.vertices;
      item["edges"] = e.edges;
    }
    if (e.code) {
      item["contractions"] = e.contractions;
      item["code"] = to_string(*e.code);
    } else {
      item["diagnostic"] = e.diagnostic;
    }
    j["entries"].push_back(std::move(item));
  }
  j["clusters"] = Json::array();
  for (const Cluster& c : report.clusters) {
    Json item;
    item[c.is_code ? "code" : "diagnostic"] = c.key;
    item["members"] = c.names;
    j["clusters"].push_back(std::move(item));
  }
  if (!report.mappings.empty()) {
    j["mappings"] = Json::array();
    for (const PairMapping& m : report.mappings) {
      Json item;
      item["from"] = m.first;
      item["to"] = m.second;
      Json pairs = Json::object();
      for (const auto& [a, b] : m.pairs) pairs[a] = b;
      item["mapping"] = std::move(pairs);
      j["mappings"].push_back(std::move(item));
    }
  }
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace dgraph
