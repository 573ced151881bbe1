#include "brooks/graph.hpp"

#include <algorithm>
#include <string>

namespace brooks {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Returns `s` itself when it is already strictly ascending, otherwise a
// sorted deduplicated copy held in `scratch`.
std::span<const Vertex> sorted_view(std::span<const Vertex> s, std::vector<Vertex>& scratch) {
  if (std::ranges::adjacent_find(s, std::greater_equal<>{}) == s.end()) return s;
  scratch.assign(s.begin(), s.end());
  std::ranges::sort(scratch);
  scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
  return scratch;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw GraphError("vertex id out of range in edge " + pair_text(u, v) + " for n = " +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop " + pair_text(u, v));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::ranges::sort(nbrs);
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    nbrs.shrink_to_fit();
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  const auto nv = neighbors(v);
  // search the shorter list
  return nu.size() <= nv.size() ? std::ranges::binary_search(nu, v) : std::ranges::binary_search(nv, u);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::vector<VertexSubset> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<VertexSubset> components;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSubset comp;
    seen[start] = true;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::ranges::sort(comp);
    components.push_back(std::move(comp));
  }
  return components;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

bool is_complete(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> scratch;
  const auto members = sorted_view(s, scratch);
  const std::size_t need = members.size() - 1;
  for (Vertex v : members) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.size() < need) return false;
    std::size_t inside = 0;
    for (Vertex w : nbrs) inside += std::ranges::binary_search(members, w) ? 1 : 0;
    if (inside != need) return false;
  }
  return true;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> scratch;
  const auto members = sorted_view(s, scratch);
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
      throw GraphError("subset vertex " + std::to_string(v) + " out of range");
    }
  }
  Subgraph sub;
  sub.to_parent.assign(members.begin(), members.end());
  EdgeList edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      if (w <= members[i]) continue;
      const auto it = std::ranges::lower_bound(members, w);
      if (it != members.end() && *it == w) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(it - members.begin()));
      }
    }
  }
  sub.graph = Graph::from_edges(members.size(), edges);
  return sub;
}

}  // namespace brooks
