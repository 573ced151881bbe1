#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brooks {

/// Dense vertex id in [0, n).
using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids.
using VertexSubset = std::vector<Vertex>;

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Raised when an edge list does not describe a simple graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted neighbor vectors, so every neighbor walk in
/// the library is in ascending id order. All tie-breaks downstream rely on
/// this.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse to one edge; self-loops and out-of-range ids
  /// raise GraphError naming the offending pair.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically ordered.
  EdgeList edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  return Graph::from_edges(n, edges);
}

/// Connected components, ordered by smallest member, members ascending.
std::vector<VertexSubset> connected_components(const Graph& g);

std::size_t max_degree(const Graph& g);

/// True iff every pair of distinct vertices in `s` is adjacent in `g`.
bool is_complete(const Graph& g, std::span<const Vertex> s);

/// An induced subgraph together with its id map. New vertex i corresponds
/// to parent vertex `to_parent[i]`; ids follow the sorted order of the
/// subset.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace brooks
