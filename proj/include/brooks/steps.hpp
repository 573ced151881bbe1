#pragma once

// Building blocks of list_color. Exposed so each step can be exercised on
// its own; list_color is the only entry point most callers need.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "brooks/chooser.hpp"
#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

/// Sequence of distinct vertices, consecutive entries adjacent.
using PathOrder = std::vector<Vertex>;

/// Replaces each list on `s` by its `d` smallest colors. Throws
/// InvariantError if one of those lists is shorter than `d`.
ListAssignment trim_lists(const ListAssignment& lists, std::size_t d, std::span<const Vertex> s);

struct PeeledVertex {
  Vertex vertex;
  std::vector<Vertex> remaining_neighbors;  // neighbors still present at removal
};

struct PeelResult {
  std::vector<PeeledVertex> stack;  // removal order
  VertexSubset core;                // every core vertex has degree exactly d in the core
};

/// Repeatedly removes the smallest-id vertex of current degree < d.
PeelResult peel(const Graph& g, std::size_t d);

/// Colors peeled vertices in reverse removal order, each with the smallest
/// list color unused by its recorded neighbors.
void unwind_peel(std::span<const PeeledVertex> stack, PartialColoring& f, const ListAssignment& lists);

struct Triple {
  Vertex first;   // v1
  Vertex middle;  // v2
  Vertex last;    // v3, not adjacent to v1
};

/// Smallest v2 having two non-adjacent neighbors, then the lexicographically
/// smallest such pair (v1 < v3). Throws InvariantError if `h` is complete.
Triple find_triple(const Graph& h);

/// Greedily extends `seed`, always appending the smallest-id neighbor of the
/// last vertex that is not yet on the path. On return every neighbor of the
/// last vertex lies on the path.
PathOrder extend_to_maximal_path(const Graph& h, PathOrder seed);

/// Sub-path (v_i, ..., v_l) from the earliest path neighbor v_i of the last
/// vertex v_l; it closes into a cycle holding all neighbors of v_l.
PathOrder farthest_neighbor_cycle(const Graph& h, std::span<const Vertex> path);

enum class AnchorRule { a, b, c };

struct CycleAnchor {
  Color color;  // f(v)
  AnchorRule rule;
};

/// f(v) in Lv such that |Lu ∩ {f(v), fw}| <= 1.
///   (a) fw not in Lu     -> min Lv
///   (b) fw in Lu and Lv  -> fw
///   (c) fw in Lu \ Lv    -> min (Lv \ Lu)
CycleAnchor choose_cycle_anchor(std::span<const Color> lu, std::span<const Color> lv, Color fw,
                            Fault fault = Fault::none);

struct TripleAnchor {
  Color first;  // f(v1)
  Color last;   // f(v3)
  AnchorRule rule;
};

/// (f(v1), f(v3)) with |L2 ∩ {f(v1), f(v3)}| <= 1, for non-adjacent v1, v3.
///   (a) L1 ∩ L3 nonempty -> both the smallest common color
///   (b) L1 \ L2 nonempty -> min (L1 \ L2), min L3
///   (c) otherwise L1 = L2 and L3 misses L2 -> min L1, min L3
TripleAnchor choose_triple_anchor(std::span<const Color> l1, std::span<const Color> l2, std::span<const Color> l3);

/// Gives each vertex of `order` the smallest list color not used by its
/// already-colored neighbors. Throws InvariantError when a vertex has no
/// free color.
void greedy_color_sequence(std::span<const Vertex> order, const Graph& h, const ListAssignment& lists,
                           PartialColoring& f);

/// Colors a connected d-regular non-complete graph, d >= 3, with all lists
/// of size exactly d.
PartialColoring color_regular_core(const Graph& h, const ListAssignment& lists, std::size_t d,
                                   TraceCounters& counters, const ChooserOptions& options = {});

/// `cycle` is shorter than h and its last vertex has no neighbor off it.
PartialColoring handle_special_case(const Graph& h, const ListAssignment& lists, std::span<const Vertex> cycle,
                                    TraceCounters& counters, const ChooserOptions& options = {});

/// `cycle` is Hamiltonian and starts with the non-adjacent triple v1, v2, v3.
PartialColoring handle_hamiltonian(const Graph& h, const ListAssignment& lists, std::span<const Vertex> cycle,
                                   TraceCounters& counters);

/// The order (v1, v3, ..., v_{j-1}, v_n, v_{n-1}, ..., v_j, v2) for a
/// Hamiltonian cycle, with j the smallest index >= 4 (1-based) such that v_j
/// is adjacent to v2.
PathOrder sigma_order(const Graph& h, std::span<const Vertex> cycle);

/// Exact routine for a connected graph of max degree <= 2: an isolated
/// vertex, a path or a cycle.
Outcome color_small_degree(const Graph& h, const ListAssignment& lists);

}  // namespace brooks
