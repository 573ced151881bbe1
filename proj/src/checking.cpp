#include "brooks/checking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brooks {

namespace {

void require_cover(const Graph& g, const ListAssignment& lists, std::size_t coloring_size) {
  if (lists.size() != g.size() || coloring_size != g.size()) {
    throw std::invalid_argument("graph, lists and coloring disagree on the vertex count");
  }
}

}  // namespace

std::string describe(const Violation& violation) {
  auto id = [](Vertex v) { return std::to_string(v + 1); };
  switch (violation.kind) {
    case ViolationKind::edge_conflict:
      return "edge-conflict " + id(violation.vertices[0]) + " " + id(violation.vertices[1]) + " color " +
             std::to_string(violation.colors[0]);
    case ViolationKind::color_not_in_list:
      return "color-not-in-list " + id(violation.vertices[0]) + " color " + std::to_string(violation.colors[0]);
    case ViolationKind::uncolored_vertex:
      return "uncolored-vertex " + id(violation.vertices[0]);
  }
  return "unknown";
}

std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const PartialColoring& f) {
  require_cover(g, lists, f.size());
  std::vector<Violation> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = static_cast<Vertex>(i);
    if (!f[i]) {
      out.push_back({ViolationKind::uncolored_vertex, {v}, {}});
    } else if (!lists.contains(v, *f[i])) {
      out.push_back({ViolationKind::color_not_in_list, {v}, {*f[i]}});
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const auto& cu = f[static_cast<std::size_t>(u)];
    const auto& cv = f[static_cast<std::size_t>(v)];
    if (cu && cv && *cu == *cv) out.push_back({ViolationKind::edge_conflict, {u, v}, {*cu}});
  }
  return out;
}

std::vector<Violation> verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f) {
  return verify_coloring(g, lists, PartialColoring(f.begin(), f.end()));
}

ExactResult solve_exact(const Graph& g, const ListAssignment& lists, std::uint64_t node_limit) {
  require_cover(g, lists, g.size());
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::ranges::stable_sort(order, {}, [&](Vertex v) { return lists[v].size(); });

  PartialColoring f(n);
  std::vector<std::size_t> choice(n, 0);  // next list index to try at each depth
  ExactResult result{ExactStatus::infeasible, {}, 0};

  auto fits = [&](Vertex v, Color c) {
    return std::ranges::none_of(g.neighbors(v), [&](Vertex w) {
      const auto& fw = f[static_cast<std::size_t>(w)];
      return fw && *fw == c;
    });
  };

  std::size_t depth = 0;
  while (true) {
    if (depth == n) {
      result.status = ExactStatus::found;
      result.coloring.reserve(n);
      for (const auto& c : f) result.coloring.push_back(*c);
      return result;
    }
    const Vertex v = order[depth];
    const auto list = lists[v];
    f[static_cast<std::size_t>(v)].reset();
    bool advanced = false;
    while (choice[depth] < list.size()) {
      const Color c = list[choice[depth]++];
      if (++result.nodes > node_limit) {
        result.status = ExactStatus::limit_exceeded;
        return result;
      }
      if (fits(v, c)) {
        f[static_cast<std::size_t>(v)] = c;
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++depth;
      if (depth < n) choice[depth] = 0;
      continue;
    }
    if (depth == 0) return result;  // exhausted
    --depth;
  }
}

}  // namespace brooks
