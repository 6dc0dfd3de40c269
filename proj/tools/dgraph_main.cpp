// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

// dgraph: recognize, code, compare and generate Dijkstra graphs.
//
// Exit status: 0 for DIJKSTRA / MATCH / success, 1 for NOT-* / NO-MATCH,
// 2 for usage, I/O and parse errors, 3 if a witness fails to replay.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgraph/batch.hpp"
#include "dgraph/canonical.hpp"
#include "dgraph/generator.hpp"
#include "dgraph/graph_io.hpp"
#include "dgraph/recognizer.hpp"

namespace {

using namespace dgraph;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kWitnessError = 3;

struct Globals {
  std::string format;
  bool quiet = false;

  std::optional<Format> file_format() const {
    if (format.empty()) return std::nullopt;
    return parse_format(format);
  }
};

// A graph, or the exit status describing why there is none.
struct Loaded {
  std::optional<GraphDocument> doc;
  int status = kOk;
};

bool is_malformed_graph(const ParseError& e) {
  return e.graph_kind() == GraphErrorKind::kSelfLoop ||
         e.graph_kind() == GraphErrorKind::kParallelEdge;
}

// Self-loops and parallel edges are well-formed input describing a graph
// that cannot be a Dijkstra graph; they get a verdict, not an input error.
Loaded load(const std::string& path, const Globals& globals, bool verdict_on_malformed) {
  Loaded result;
  try {
    result.doc = read_graph_file(path, globals.file_format());
  } catch (const ParseError& e) {
    if (verdict_on_malformed && is_malformed_graph(e)) {
      std::cout << to_string(Status::kNotDijkstra) << " ("
                << to_string(Reason::kMalformedInput) << ": " << e.what()
                << ")\n";
      result.status = kNegative;
    } else {
      std::cerr << "dgraph: " << path << ": " << e.what() << "\n";
      result.status = kInputError;
    }
  } catch (const IoError& e) {
    std::cerr << "dgraph: " << e.what() << "\n";
    result.status = kInputError;
  }
  return result;
}

std::string member_list(const FlowGraph& g, const PrimeMatch& step) {
  std::string out;
  for (VertexIndex v : step.members) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

int run_check(const std::string& path, bool witness, bool verify,
              const Globals& globals) {
  Loaded loaded = load(path, globals, true);
  if (!loaded.doc) return loaded.status;
  const FlowGraph& g = loaded.doc->graph;
  const Verdict verdict = recognize(g);

  if (verdict.is_dijkstra()) {
    std::cout << "DIJKSTRA (k=" << verdict.trace.size() << ")\n";
  } else {
    std::cout << to_string(verdict.status) << " (" << describe(verdict) << ")\n";
  }
  if (witness && !globals.quiet) {
    for (std::size_t i = 0; i < verdict.trace.size(); ++i) {
      const PrimeMatch& step = verdict.trace.steps[i];
      std::cout << i + 1 << ": " << to_string(step.kind) << " source="
                << g.name(step.source) << " members=[" << member_list(g, step)
                << "]\n";
    }
  }
  if (verify && verdict.is_dijkstra()) {
    try {
      const FlowGraph end = replay(g, verdict.trace);
      if (!end.is_trivial()) {
        std::cerr << "dgraph: witness replay ended with " << end.vertex_count()
                  << " vertices\n";
        return kWitnessError;
      }
      if (!globals.quiet) std::cerr << "witness verified\n";
    } catch (const ReplayError& e) {
      std::cerr << "dgraph: witness replay failed: " << e.what() << "\n";
      return kWitnessError;
    }
  }
  return verdict.is_dijkstra() ? kOk : kNegative;
}

int run_canon(const std::string& path, bool provenance, const Globals& globals) {
  Loaded loaded = load(path, globals, true);
  if (!loaded.doc) return loaded.status;
  const FlowGraph& g = loaded.doc->graph;
  Analysis a = analyze(g);
  if (!a.code) {
    std::cout << to_string(a.verdict.status) << " (" << describe(a.verdict)
              << ")\n";
    return kNegative;
  }
  std::cout << to_string(*a.code) << "\n";
  if (provenance) {
    std::string line;
    for (std::size_t i = 0; i < a.code->size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(a.code->tokens[i]);
      if (a.code->provenance[i] != kNoVertex) {
        line += ':' + g.name(a.code->provenance[i]);
      }
    }
    std::cout << line << "\n";
  }
  return kOk;
}

int run_iso(const std::string& path1, const std::string& path2,
            const Globals& globals) {
  Loaded first = load(path1, globals, false);
  if (!first.doc) return first.status;
  Loaded second = load(path2, globals, false);
  if (!second.doc) return second.status;
  const FlowGraph& g1 = first.doc->graph;
  const FlowGraph& g2 = second.doc->graph;
  try {
    auto mapping = is_isomorphic(g1, g2);
    if (!mapping) {
      std::cout << "NO-MATCH\n";
      return kNegative;
    }
    std::cout << "MATCH\n";
    for (VertexIndex v = 0; v < g1.vertex_count(); ++v) {
      std::cout << g1.name(v) << " -> " << g2.name(mapping->image[v]) << "\n";
    }
    return kOk;
  } catch (const NotDijkstraError& e) {
    std::cout << to_string(e.verdict().status) << " (graph " << e.which()
              << ": " << describe(e.verdict()) << ")\n";
    return kNegative;
  }
}

int run_gen(std::uint64_t seed, std::size_t size, const std::string& kinds_text,
            const std::string& out_path, const Globals& globals) {
  GeneratorOptions options;
  if (!kinds_text.empty()) {
    std::vector<StatementKind> kinds;
    std::stringstream list(kinds_text);
    std::string item;
    while (std::getline(list, item, ',')) {
      auto kind = parse_statement_kind(item);
      if (!kind || kind->shape == Shape::kTrivial) {
        std::cerr << "dgraph: unknown statement kind '" << item << "'\n";
        return kInputError;
      }
      kinds.push_back(*kind);
    }
    options = GeneratorOptions::only(kinds);
  }
  GeneratedGraph generated;
  try {
    generated = generate_dg(seed, size, options);
  } catch (const std::invalid_argument& e) {
    std::cerr << "dgraph: " << e.what() << "\n";
    return kInputError;
  }

  GraphDocument doc;
  doc.name = "dg-s" + std::to_string(seed) + "-n" + std::to_string(size);
  doc.graph = generated.graph;
  doc.metadata = {{"seed", std::to_string(seed)},
                  {"size", std::to_string(size)}};
  if (!kinds_text.empty()) doc.metadata.emplace_back("kinds", kinds_text);

  std::optional<Format> format = globals.file_format();
  if (!format && !out_path.empty()) format = format_for_path(out_path);
  const std::string text = serialize_graph(doc, format.value_or(Format::kJson));
  const std::string script = serialize_script(generated.script, generated.graph);
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  try {
    write_text_file(out_path, text);
    write_text_file(out_path + ".script", script);
  } catch (const IoError& e) {
    std::cerr << "dgraph: " << e.what() << "\n";
    return kInputError;
  }
  if (!globals.quiet) {
    std::cerr << "wrote " << out_path << " (n=" << generated.graph.vertex_count()
              << ", m=" << generated.graph.edge_count() << ") and "
              << out_path << ".script\n";
  }
  return kOk;
}

int run_batch(const std::string& dir, bool mappings, bool serial,
              const Globals& globals) {
  std::vector<BatchInput> inputs;
  try {
    inputs = load_directory(dir, globals.file_format());
  } catch (const IoError& e) {
    std::cerr << "dgraph: " << e.what() << "\n";
    return kInputError;
  }
  std::vector<AnalysisEntry> entries =
      serial ? analyze_all_serial(inputs) : analyze_all(inputs);
  std::cout << report_to_json(build_report(std::move(entries), inputs, mappings));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize, canonically code and compare Dijkstra graphs."};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Graph file format")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_flag("-q,--quiet", globals.quiet, "Suppress traces and notes");

  std::string path1;
  std::string path2;

  auto* check = app.add_subcommand("check", "Decide whether a graph is a Dijkstra graph");
  bool witness = false;
  bool verify = false;
  check->add_option("file", path1, "Graph file")->required();
  check->add_flag("--witness", witness, "Print the contraction witness");
  check->add_flag("--verify-witness", verify, "Replay the witness and check it");

  auto* canon = app.add_subcommand("canon", "Print the canonical code");
  bool provenance = false;
  canon->add_option("file", path1, "Graph file")->required();
  canon->add_flag("--provenance", provenance, "Also print the vertex behind each 1");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two Dijkstra graphs");
  iso->add_option("file1", path1, "First graph file")->required();
  iso->add_option("file2", path2, "Second graph file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random Dijkstra graph");
  std::uint64_t seed = 0;
  std::size_t size = 1;
  std::string kinds;
  std::string out_path;
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--size", size, "Target vertex count")->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--kinds", kinds,
                  "Comma-separated statement kinds, e.g. while,if-then,case4");
  gen->add_option("-o,--output", out_path,
                  "Output file; the script goes to <file>.script");

  auto* batch = app.add_subcommand("batch", "Analyze and cluster a directory of graphs");
  bool mappings = false;
  bool serial = false;
  batch->add_option("dir", path1, "Directory of graph files")->required();
  batch->add_flag("--mappings", mappings, "Include vertex mappings within clusters");
  batch->add_flag("--serial", serial, "Analyze on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (check->parsed()) return run_check(path1, witness, verify, globals);
  if (canon->parsed()) return run_canon(path1, provenance, globals);
  if (iso->parsed()) return run_iso(path1, path2, globals);
  if (gen->parsed()) return run_gen(seed, size, kinds, out_path, globals);
  if (batch->parsed()) return run_batch(path1, mappings, serial, globals);
  return kInputError;
}
