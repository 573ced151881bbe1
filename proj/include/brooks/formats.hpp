#pragma once

// Text formats, all with 1-based vertex ids.
//
// Graph (DIMACS-like):
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>
// The edge count m is informational; duplicate `e` lines collapse.
//
// Lists: one line per vertex, `<id> <color> [<color> ...]`.
// Coloring: one line per colored vertex, `<id> <color>`.
// Blank lines and `c` comment lines are ignored in every format.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number of the offending input line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

ListAssignment parse_lists(std::string_view text, std::size_t n);
std::string emit_lists(const ListAssignment& lists);

/// Vertices without a line stay uncolored.
PartialColoring parse_coloring(std::string_view text, std::size_t n);
std::string emit_coloring(const Coloring& f);
std::string emit_coloring(const PartialColoring& f);

}  // namespace brooks
