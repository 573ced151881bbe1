#include "brooks/formats.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <vector>

namespace brooks {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text, std::size_t& total) {
  std::vector<Line> out;
  total = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const auto raw = text.substr(0, end);
    ++total;
    auto tokens = split(raw);
    if (!tokens.empty() && tokens[0] != "c") out.push_back({total, std::move(tokens)});
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
  }
  return out;
}

std::uint64_t number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex vertex_id(std::string_view token, std::size_t n, std::size_t line) {
  const std::uint64_t id = number(token, line);
  if (id < 1 || id > n) {
    throw ParseError(line, "vertex id " + std::string(token) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t total = 0;
  const auto lines = content_lines(text, total);
  std::optional<std::size_t> n;
  EdgeList edges;
  for (const auto& [no, tok] : lines) {
    if (tok[0] == "p") {
      if (n) throw ParseError(no, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(no, "expected 'p edge <n> <m>'");
      }
      const std::uint64_t count = number(tok[2], no);
      if (count > static_cast<std::uint64_t>(std::numeric_limits<Vertex>::max())) {
        throw ParseError(no, "vertex count too large");
      }
      n = static_cast<std::size_t>(count);
      number(tok[3], no);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(no, "edge line before the 'p edge' line");
      if (tok.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
      const Vertex u = vertex_id(tok[1], *n, no);
      const Vertex v = vertex_id(tok[2], *n, no);
      if (u == v) throw ParseError(no, "self-loop on vertex " + std::string(tok[1]));
      edges.emplace_back(u, v);
    } else {
      throw ParseError(no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(total == 0 ? 1 : total, "missing 'p edge' line");
  return Graph::from_edges(*n, edges);
}

std::string emit_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

ListAssignment parse_lists(std::string_view text, std::size_t n) {
  std::size_t total = 0;
  const auto lines = content_lines(text, total);
  std::vector<std::vector<Color>> lists(n);
  std::vector<bool> seen(n, false);
  for (const auto& [no, tok] : lines) {
    const Vertex v = vertex_id(tok[0], n, no);
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(no, "repeated list for vertex " + std::string(tok[0]));
    if (tok.size() < 2) throw ParseError(no, "empty list for vertex " + std::string(tok[0]));
    seen[static_cast<std::size_t>(v)] = true;
    auto& list = lists[static_cast<std::size_t>(v)];
    for (std::size_t i = 1; i < tok.size(); ++i) list.push_back(number(tok[i], no));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw ParseError(total == 0 ? 1 : total, "missing list for vertex " + std::to_string(v + 1));
  }
  return ListAssignment(std::move(lists));
}

std::string emit_lists(const ListAssignment& lists) {
  std::string out;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out += std::to_string(v + 1);
    for (Color c : lists[static_cast<Vertex>(v)]) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

PartialColoring parse_coloring(std::string_view text, std::size_t n) {
  std::size_t total = 0;
  const auto lines = content_lines(text, total);
  PartialColoring f(n);
  for (const auto& [no, tok] : lines) {
    if (tok.size() != 2) throw ParseError(no, "expected '<id> <color>'");
    const Vertex v = vertex_id(tok[0], n, no);
    auto& slot = f[static_cast<std::size_t>(v)];
    if (slot) throw ParseError(no, "repeated color for vertex " + std::string(tok[0]));
    slot = number(tok[1], no);
  }
  return f;
}

std::string emit_coloring(const PartialColoring& f) {
  std::string out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v]) out += std::to_string(v + 1) + " " + std::to_string(*f[v]) + "\n";
  }
  return out;
}

std::string emit_coloring(const Coloring& f) {
  std::string out;
  for (std::size_t v = 0; v < f.size(); ++v) out += std::to_string(v + 1) + " " + std::to_string(f[v]) + "\n";
  return out;
}

}  // namespace brooks
