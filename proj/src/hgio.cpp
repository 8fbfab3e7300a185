#include "hyperkey/hgio.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hyperkey/error.hpp"

namespace hyperkey {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Position {
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void fail(ErrorKind kind, Position at, const std::string& what) {
  throw Error(kind, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

struct PendingEdge {
  Edge edge;
  std::vector<Token> members;
  std::size_t line;
};

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<VertexSet> vertices;
  std::vector<PendingEdge> edges;
  std::map<EdgeId, std::size_t> seen_edges;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    if (head.text == "vertices:") {
      if (vertices) fail(ErrorKind::ParseError, {line_no, head.column}, "second vertices statement");
      vertices.emplace();
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (tok.text == "weight" || tok.text.back() == ':')
          fail(ErrorKind::ParseError, {line_no, tok.column}, "reserved vertex id '" + tok.text + "'");
        if (!vertices->insert(tok.text).second)
          fail(ErrorKind::ParseError, {line_no, tok.column}, "repeated vertex '" + tok.text + "'");
      }
    } else if (head.text == "edge") {
      if (tokens.size() < 2 || tokens[1].text.size() < 2 || tokens[1].text.back() != ':')
        fail(ErrorKind::ParseError, {line_no, tokens.size() < 2 ? line.size() + 1 : tokens[1].column},
             "expected 'edge <id>:'");
      PendingEdge pending;
      pending.line = line_no;
      pending.edge.id = tokens[1].text.substr(0, tokens[1].text.size() - 1);
      if (auto [it, fresh] = seen_edges.emplace(pending.edge.id, line_no); !fresh)
        fail(ErrorKind::DuplicateEdgeId, {line_no, tokens[1].column},
             "edge '" + pending.edge.id + "' already defined on line " + std::to_string(it->second));
      std::size_t t = 2;
      for (; t < tokens.size() && tokens[t].text != "weight"; ++t) {
        pending.members.push_back(tokens[t]);
        pending.edge.members.insert(tokens[t].text);
      }
      if (pending.members.empty())
        fail(ErrorKind::ParseError, {line_no, t < tokens.size() ? tokens[t].column : line.size() + 1},
             "edge '" + pending.edge.id + "' has no members");
      if (t == tokens.size()) fail(ErrorKind::ParseError, {line_no, line.size() + 1}, "missing 'weight'");
      if (t + 2 != tokens.size())
        fail(ErrorKind::ParseError, {line_no, t + 1 < tokens.size() ? tokens[t + 2].column : line.size() + 1},
             t + 1 < tokens.size() ? "unexpected token after weight" : "missing weight value");
      const Token& w = tokens[t + 1];
      try {
        pending.edge.weight = parse_rational(w.text);
      } catch (const Error&) {
        fail(ErrorKind::ParseError, {line_no, w.column}, "bad weight '" + w.text + "'");
      }
      if (pending.edge.weight <= 0)
        fail(ErrorKind::NonpositiveWeight, {line_no, w.column}, "weight " + w.text + " of edge '" + pending.edge.id + "'");
      edges.push_back(std::move(pending));
    } else {
      fail(ErrorKind::ParseError, {line_no, head.column}, "unknown statement '" + head.text + "'");
    }
  }
  if (!vertices) fail(ErrorKind::ParseError, {line_no, 1}, "missing vertices statement");
  std::vector<Edge> out;
  for (auto& pending : edges) {
    for (const auto& m : pending.members)
      if (!vertices->count(m.text))
        fail(ErrorKind::ParseError, {pending.line, m.column}, "member '" + m.text + "' is not a declared vertex");
    out.push_back(std::move(pending.edge));
  }
  return Hypergraph(std::move(*vertices), std::move(out));
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : h.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& e : h.edges()) {
    out << "edge " << e.id << ':';
    for (const auto& v : e.members) out << ' ' << v;
    out << " weight " << to_string(e.weight) << '\n';
  }
  return out.str();
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

}  // namespace hyperkey
