// Copyright 2026 The dgraph Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dgraph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace dgraph {
namespace {

using Json = nlohmann::json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string json_quote(const std::string& s) {
  return Json(s).dump(-1, ' ', false, Json::error_handler_t::replace);
}

Metadata sorted_metadata(const Metadata& metadata) {
  std::map<std::string, std::string> by_key(metadata.begin(), metadata.end());
  return {by_key.begin(), by_key.end()};
}

// Rethrows a validation error as a ParseError; `where` maps the error's
// item position to a location string and line.
template <typename Locate>
[[noreturn]] void rethrow_graph_error(const GraphError& e, Locate&& locate) {
  if (e.kind() == GraphErrorKind::kSourceMissing) {
    throw ParseError(ParseError::Kind::kMissingSource, 0, e.what(), e.kind());
  }
  auto [line, where] = locate(e.kind(), e.item());
  std::string message = e.what();
  if (!where.empty()) message = where + ": " + message;
  throw ParseError(ParseError::Kind::kInvalidGraph, line, message, e.kind());
}

// ---- JSON ----

const std::string& json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ParseError(ParseError::Kind::kSyntax, 0, where + ": expected a string");
  }
  return j.get_ref<const std::string&>();
}

GraphDocument parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(ParseError::Kind::kSyntax, line_at(text, e.byte), e.what());
  }
  if (!j.is_object()) {
    throw ParseError(ParseError::Kind::kSyntax, 1, "expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "source" && key != "vertices" &&
        key != "edges" && key != "metadata") {
      throw ParseError(ParseError::Kind::kSyntax, 0, "unknown key '" + key + "'");
    }
  }

  GraphDocument doc;
  if (j.contains("name")) doc.name = json_string(j["name"], "/name");
  if (!j.contains("source")) {
    throw ParseError(ParseError::Kind::kMissingSource, 0, "no \"source\" given");
  }
  const std::string source = json_string(j["source"], "/source");

  std::vector<std::string> names;
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError(ParseError::Kind::kSyntax, 0, "/vertices: expected an array");
  }
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    names.push_back(json_string(j["vertices"][i], "/vertices/" + std::to_string(i)));
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      throw ParseError(ParseError::Kind::kSyntax, 0, "/edges: expected an array");
    }
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const Json& e = j["edges"][i];
      const std::string where = "/edges/" + std::to_string(i);
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(ParseError::Kind::kSyntax, 0,
                         where + ": expected [from, to]");
      }
      edges.emplace_back(json_string(e[0], where + "/0"),
                         json_string(e[1], where + "/1"));
    }
  }

  if (j.contains("metadata")) {
    const Json& meta = j["metadata"];
    if (!meta.is_object()) {
      throw ParseError(ParseError::Kind::kSyntax, 0, "/metadata: expected an object");
    }
    for (const auto& [key, value] : meta.items()) {
      doc.metadata.emplace_back(key, json_string(value, "/metadata/" + key));
    }
  }

  try {
    doc.graph = FlowGraph::build(std::move(names), edges, source);
  } catch (const GraphError& e) {
    rethrow_graph_error(e, [](GraphErrorKind kind, std::size_t item) {
      std::string where;
      if (item != kNoItem) {
        where = (kind == GraphErrorKind::kDuplicateVertex ? "/vertices/"
                                                          : "/edges/") +
                std::to_string(item);
      }
      return std::pair<std::size_t, std::string>{0, where};
    });
  }
  return doc;
}

std::string serialize_json(const GraphDocument& doc) {
  const FlowGraph& g = doc.graph;
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << json_quote(doc.name) << ",\n";
  out << "  \"source\": " << json_quote(g.name(g.source())) << ",\n";
  out << "  \"vertices\": [";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << (v ? ", " : "") << json_quote(g.name(static_cast<VertexIndex>(v)));
  }
  out << "],\n";
  out << "  \"edges\": [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : ", ") << "[" << json_quote(g.name(e.from)) << ", "
        << json_quote(g.name(e.to)) << "]";
    first = false;
  }
  out << "]";
  const Metadata meta = sorted_metadata(doc.metadata);
  if (!meta.empty()) {
    out << ",\n  \"metadata\": {";
    for (std::size_t i = 0; i < meta.size(); ++i) {
      out << (i ? ", " : "") << json_quote(meta[i].first) << ": "
          << json_quote(meta[i].second);
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

// ---- DOT ----

enum class Tok { kId, kLBrace, kRBrace, kLBracket, kRBracket, kEq, kSemi,
                 kComma, kArrow, kUndirected, kEnd };

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  bool quoted = false;
  std::size_t line = 1;
};

bool is_id_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_id_char(char c) {
  return is_id_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    auto single = [&](Tok type) {
      ++pos_;
      t.type = type;
      return t;
    };
    switch (c) {
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case '[': return single(Tok::kLBracket);
      case ']': return single(Tok::kRBracket);
      case '=': return single(Tok::kEq);
      case ';': return single(Tok::kSemi);
      case ',': return single(Tok::kComma);
      default: break;
    }
    if (c == '-' && pos_ + 1 < text_.size() &&
        (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
      t.type = text_[pos_ + 1] == '>' ? Tok::kArrow : Tok::kUndirected;
      pos_ += 2;
      return t;
    }
    t.type = Tok::kId;
    if (c == '"') {
      t.quoted = true;
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail(t.line, "unterminated string");
        char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\n') ++line_;
        if (d == '\\' && pos_ < text_.size() &&
            (text_[pos_] == '"' || text_[pos_] == '\\')) {
          d = text_[pos_++];
        }
        t.text.push_back(d);
      }
      return t;
    }
    if (is_id_start(c)) {
      while (pos_ < text_.size() && is_id_char(text_[pos_])) t.text.push_back(text_[pos_++]);
      return t;
    }
    if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '-') t.text.push_back(text_[pos_++]);
      while (pos_ < text_.size() &&
             (text_[pos_] == '.' ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        t.text.push_back(text_[pos_++]);
      }
      if (t.text == "-" || t.text == "." || t.text == "-.") {
        fail(t.line, "malformed numeral");
      }
      return t;
    }
    fail(t.line, std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] static void fail(std::size_t line, const std::string& message) {
    throw ParseError(ParseError::Kind::kSyntax, line, message);
  }

 private:
  void skip_space_and_comments() {
    bool line_start = pos_ == 0 || text_[pos_ - 1] == '\n';
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        line_start = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && line_start) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        const std::size_t start_line = line_;
        const std::size_t end = text_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) fail(start_line, "unterminated comment");
        line_ += static_cast<std::size_t>(
            std::count(text_.begin() + pos_, text_.begin() + end, '\n'));
        pos_ = end + 2;
        line_start = false;
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool is_keyword(const Token& t, std::string_view word) {
  return t.type == Tok::kId && !t.quoted && lowercase(t.text) == word;
}

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lexer_(text) { advance(); }

  GraphDocument parse() {
    if (is_keyword(tok_, "strict")) advance();
    if (is_keyword(tok_, "graph")) {
      DotLexer::fail(tok_.line, "undirected graphs are not supported");
    }
    if (!is_keyword(tok_, "digraph")) DotLexer::fail(tok_.line, "expected 'digraph'");
    advance();
    GraphDocument doc;
    if (tok_.type == Tok::kId) {
      doc.name = tok_.text;
      advance();
    }
    expect(Tok::kLBrace, "'{'");
    while (tok_.type != Tok::kRBrace) {
      if (tok_.type == Tok::kEnd) DotLexer::fail(tok_.line, "missing '}'");
      statement();
      while (tok_.type == Tok::kSemi || tok_.type == Tok::kComma) advance();
    }
    advance();
    if (tok_.type != Tok::kEnd) {
      DotLexer::fail(tok_.line, "unexpected input after the graph");
    }
    doc.metadata = std::move(metadata_);
    doc.graph = build();
    return doc;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Tok type, const char* what) {
    if (tok_.type != type) DotLexer::fail(tok_.line, std::string("expected ") + what);
    advance();
  }

  Token take_id(const char* what) {
    if (tok_.type != Tok::kId) DotLexer::fail(tok_.line, std::string("expected ") + what);
    Token t = tok_;
    advance();
    return t;
  }

  // [a=b, c=d; e]
  std::vector<std::pair<Token, Token>> attr_lists() {
    std::vector<std::pair<Token, Token>> attrs;
    while (tok_.type == Tok::kLBracket) {
      advance();
      while (tok_.type != Tok::kRBracket) {
        Token key = take_id("an attribute name");
        Token value;
        value.text = "true";
        value.line = key.line;
        if (tok_.type == Tok::kEq) {
          advance();
          value = take_id("an attribute value");
        }
        attrs.emplace_back(std::move(key), std::move(value));
        if (tok_.type == Tok::kSemi || tok_.type == Tok::kComma) advance();
      }
      advance();
    }
    return attrs;
  }

  void statement() {
    if (is_keyword(tok_, "subgraph") || tok_.type == Tok::kLBrace) {
      DotLexer::fail(tok_.line, "subgraphs are not supported");
    }
    if (is_keyword(tok_, "graph") || is_keyword(tok_, "node") ||
        is_keyword(tok_, "edge")) {
      const std::string which = lowercase(tok_.text);
      const std::size_t line = tok_.line;
      advance();
      if (tok_.type != Tok::kLBracket) {
        DotLexer::fail(line, "expected '[' after '" + which + "'");
      }
      auto attrs = attr_lists();
      if (which == "graph") {
        for (auto& [k, v] : attrs) set_metadata(k.text, v.text);
      } else if (which == "node") {
        for (auto& [k, v] : attrs) {
          if (k.text == "source") {
            DotLexer::fail(k.line, "'source' cannot be a node default");
          }
        }
      }
      return;
    }
    Token first = take_id("a statement");
    if (tok_.type == Tok::kEq) {
      advance();
      Token value = take_id("a value");
      set_metadata(first.text, value.text);
      return;
    }
    if (tok_.type == Tok::kUndirected) {
      DotLexer::fail(tok_.line, "'--' edges are not supported");
    }
    if (tok_.type == Tok::kArrow) {
      std::vector<Token> chain{first};
      while (tok_.type == Tok::kArrow) {
        advance();
        if (tok_.type == Tok::kLBrace || is_keyword(tok_, "subgraph")) {
          DotLexer::fail(tok_.line, "subgraphs are not supported");
        }
        chain.push_back(take_id("a node"));
      }
      if (tok_.type == Tok::kUndirected) {
        DotLexer::fail(tok_.line, "'--' edges are not supported");
      }
      attr_lists();
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        edges_.push_back({vertex(chain[i].text), vertex(chain[i + 1].text)});
        edge_lines_.push_back(chain[i + 1].line);
      }
      return;
    }
    const VertexIndex v = vertex(first.text);
    for (auto& [k, value] : attr_lists()) {
      if (k.text != "source") continue;
      const std::string flag = lowercase(value.text);
      if (flag == "false") continue;
      if (flag != "true") {
        DotLexer::fail(value.line, "'source' must be true or false");
      }
      if (source_ != kNoVertex && source_ != v) {
        throw ParseError(ParseError::Kind::kMissingSource, value.line,
                         "more than one node has source=true");
      }
      source_ = v;
    }
  }

  void set_metadata(const std::string& key, const std::string& value) {
    auto it = std::find_if(metadata_.begin(), metadata_.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it != metadata_.end()) {
      it->second = value;
    } else {
      metadata_.emplace_back(key, value);
    }
  }

  VertexIndex vertex(const std::string& name) {
    auto [it, inserted] =
        ids_.try_emplace(name, static_cast<VertexIndex>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  FlowGraph build() {
    if (source_ == kNoVertex) {
      throw ParseError(ParseError::Kind::kMissingSource, 0,
                       "no node has source=true");
    }
    try {
      return FlowGraph::build(names_, edges_, source_);
    } catch (const GraphError& e) {
      rethrow_graph_error(e, [&](GraphErrorKind, std::size_t item) {
        if (item == kNoItem || item >= edge_lines_.size()) {
          return std::pair<std::size_t, std::string>{0, ""};
        }
        return std::pair<std::size_t, std::string>{
            edge_lines_[item], "line " + std::to_string(edge_lines_[item])};
      });
    }
  }

  DotLexer lexer_;
  Token tok_;
  std::vector<std::string> names_;
  std::map<std::string, VertexIndex> ids_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> edge_lines_;
  VertexIndex source_ = kNoVertex;
  Metadata metadata_;
};

bool is_plain_id(const std::string& s) {
  if (s.empty()) return false;
  static const char* const kKeywords[] = {"node", "edge", "graph",
                                          "digraph", "subgraph", "strict"};
  const std::string lower = lowercase(s);
  for (const char* k : kKeywords) {
    if (lower == k) return false;
  }
  if (std::all_of(s.begin(), s.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return true;
  }
  return is_id_start(s[0]) && std::all_of(s.begin(), s.end(), is_id_char);
}

std::string dot_id(const std::string& s) {
  if (is_plain_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string serialize_dot(const GraphDocument& doc) {
  const FlowGraph& g = doc.graph;
  std::ostringstream out;
  out << "digraph " << (doc.name.empty() ? "" : dot_id(doc.name) + " ") << "{\n";
  for (const auto& [k, v] : sorted_metadata(doc.metadata)) {
    out << "  " << dot_id(k) << "=" << dot_id(v) << ";\n";
  }
  out << "  " << dot_id(g.name(g.source())) << " [source=true];\n";
  for (const Edge& e : g.edges()) {
    out << "  " << dot_id(g.name(e.from)) << " -> " << dot_id(g.name(e.to))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message,
                       std::optional<GraphErrorKind> graph_kind)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                              : message),
      kind_(kind),
      line_(line),
      graph_kind_(graph_kind) {}

const char* to_string(Format format) {
  return format == Format::kJson ? "json" : "dot";
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  return std::nullopt;
}

std::optional<Format> format_for_path(const std::filesystem::path& path) {
  const std::string ext = lowercase(path.extension().string());
  if (ext == ".json") return Format::kJson;
  if (ext == ".dot" || ext == ".gv") return Format::kDot;
  return std::nullopt;
}

GraphDocument parse_graph(std::string_view text, Format format) {
  GraphDocument doc =
      format == Format::kJson ? parse_json(text) : DotParser(text).parse();
  doc.metadata = sorted_metadata(doc.metadata);
  return doc;
}

std::string serialize_graph(const GraphDocument& doc, Format format) {
  return format == Format::kJson ? serialize_json(doc) : serialize_dot(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

GraphDocument read_graph_file(const std::filesystem::path& path,
                              std::optional<Format> format) {
  if (!format) format = format_for_path(path);
  if (!format) {
    throw IoError("cannot infer the format of '" + path.string() +
                  "'; pass --format");
  }
  return parse_graph(read_text_file(path), *format);
}

std::string serialize_script(const ExpansionScript& script,
                             const FlowGraph& graph) {
  nlohmann::ordered_json j;
  j["seed"] = script.seed;
  j["steps"] = nlohmann::ordered_json::array();
  for (const ExpansionStep& step : script.steps) {
    nlohmann::ordered_json s;
    s["target"] = step.target;
    s["kind"] = to_string(step.kind);
    j["steps"].push_back(std::move(s));
  }
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < script.labels.size() && v < graph.vertex_count(); ++v) {
    labels[graph.name(static_cast<VertexIndex>(v))] =
        std::string(1, static_cast<char>(script.labels[v]));
  }
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

ExpansionScript parse_script(std::string_view text) {
  ExpansionScript script;
  try {
    Json j = Json::parse(text.begin(), text.end());
    script.seed = j.at("seed").get<std::uint64_t>();
    for (const Json& s : j.at("steps")) {
      const std::string kind_text = s.at("kind").get<std::string>();
      auto kind = parse_statement_kind(kind_text);
      if (!kind) {
        throw ParseError(ParseError::Kind::kSyntax, 0,
                         "unknown statement kind '" + kind_text + "'");
      }
      script.steps.push_back({s.at("target").get<std::string>(), *kind});
    }
  } catch (const Json::exception& e) {
    throw ParseError(ParseError::Kind::kSyntax, 0, e.what());
  }
  return script;
}

}  // namespace dgraph
