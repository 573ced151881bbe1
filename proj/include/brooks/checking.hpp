#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

enum class ViolationKind { edge_conflict, color_not_in_list, uncolored_vertex };

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;  // one vertex, or the two edge endpoints
  std::vector<Color> colors;     // the offending color; empty for uncolored
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// e.g. "edge-conflict 1 2 color 5" (ids 1-based).
std::string describe(const Violation& violation);

/// Every way `f` fails to be a proper list coloring. Vertex problems come
/// first in id order, then edge conflicts in (u, v) order. Empty iff `f` is
/// total, list-respecting and proper.
std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const PartialColoring& f);
std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f);

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

enum class ExactStatus { found, infeasible, limit_exceeded };

struct ExactResult {
  ExactStatus status;
  Coloring coloring;        // set when status == found
  std::uint64_t nodes = 0;  // color assignments tried
};

/// Complete backtracking search. Vertices are fixed in order of ascending
/// list size, ties by id; values are tried in ascending order. Meant for
/// n up to about 20.
ExactResult solve_exact(const Graph& g, const ListAssignment& lists, std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace brooks
