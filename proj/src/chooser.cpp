#include "brooks/chooser.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <type_traits>

#include "brooks/steps.hpp"

namespace brooks {

namespace {

std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }

bool has_color(std::span<const Color> list, Color c) { return std::ranges::binary_search(list, c); }

VertexSubset all_vertices(std::size_t n) {
  VertexSubset all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return all;
}

// Smallest color of `list` not carried by any colored vertex of `nbrs`.
std::optional<Color> smallest_free(std::span<const Color> list, std::span<const Vertex> nbrs,
                                   const PartialColoring& f) {
  std::vector<Color> used;
  used.reserve(nbrs.size());
  for (Vertex w : nbrs) {
    if (const auto& c = f[index(w)]) used.push_back(*c);
  }
  std::ranges::sort(used);
  auto it = used.begin();
  for (Color c : list) {
    while (it != used.end() && *it < c) ++it;
    if (it == used.end() || *it != c) return c;
  }
  return std::nullopt;
}

std::size_t overlap_with(std::span<const Color> list, Color a, Color b) {
  if (a == b) return has_color(list, a) ? 1 : 0;
  return (has_color(list, a) ? 1 : 0) + (has_color(list, b) ? 1 : 0);
}

void count_cycle_anchor(TraceCounters& counters, AnchorRule rule) {
  switch (rule) {
    case AnchorRule::a: ++counters.eq1_case_a; break;
    case AnchorRule::b: ++counters.eq1_case_b; break;
    case AnchorRule::c: ++counters.eq1_case_c; break;
  }
}

void count_triple_anchor(TraceCounters& counters, AnchorRule rule) {
  switch (rule) {
    case AnchorRule::a: ++counters.eq2_case_common; break;
    case AnchorRule::b: ++counters.eq2_case_left; break;
    case AnchorRule::c: ++counters.eq2_case_right; break;
  }
}

Coloring to_total(const PartialColoring& f) {
  Coloring out;
  out.reserve(f.size());
  for (const auto& c : f) {
    check_invariant(c.has_value(), "coloring left a vertex uncolored");
    out.push_back(*c);
  }
  return out;
}

// Walks a connected max-degree-2 graph from `start`, first stepping to
// `first_step`, until every vertex has been visited once.
std::vector<Vertex> walk(const Graph& h, Vertex start, Vertex first_step) {
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = first_step;
  while (cur != start && order.size() < h.size()) {
    order.push_back(cur);
    Vertex next = -1;
    for (Vertex w : h.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  return order;
}

Outcome color_connected(const Graph& h, const ListAssignment& lists, TraceCounters& counters,
                        const ChooserOptions& options) {
  const std::size_t n = h.size();
  const std::size_t d = max_degree(h);

  if (d <= 2) {
    ++counters.small_degree;
    return color_small_degree(h, lists);
  }

  if (n == d + 1 && is_complete(h, all_vertices(n))) {
    const bool long_lists = std::ranges::all_of(lists.lists(), [d](const auto& l) { return l.size() > d; });
    if (!long_lists) return NotApplicable{NotApplicableReason::complete_component, all_vertices(n)};
    PartialColoring f(n);
    greedy_color_sequence(all_vertices(n), h, lists, f);
    return Success{to_total(f)};
  }

  if (std::ranges::any_of(lists.lists(), [d](const auto& l) { return l.size() < d; })) {
    return NotApplicable{NotApplicableReason::list_too_short, all_vertices(n)};
  }

  const ListAssignment trimmed = trim_lists(lists, d, all_vertices(n));
  PeelResult peeled = peel(h, d);
  counters.peel += peeled.stack.size();

  PartialColoring f(n);
  if (!peeled.core.empty()) {
    const Subgraph core = induced_subgraph(h, peeled.core);
    for (const auto& part : connected_components(core.graph)) {
      const Subgraph piece = induced_subgraph(core.graph, part);
      std::vector<Vertex> to_h(part.size());
      for (std::size_t i = 0; i < part.size(); ++i) to_h[i] = core.to_parent[index(piece.to_parent[i])];
      check_invariant(!is_complete(piece.graph, all_vertices(piece.graph.size())),
                      "regular core component is complete");
      const PartialColoring sub = color_regular_core(piece.graph, trimmed.restrict_to(to_h), d, counters, options);
      for (std::size_t i = 0; i < sub.size(); ++i) f[index(to_h[i])] = sub[i];
    }
  }
  unwind_peel(peeled.stack, f, trimmed);
  return Success{to_total(f)};
}

}  // namespace

// ---------------------------------------------------------------------------
// TraceCounters

std::array<std::pair<std::string_view, std::uint64_t>, TraceCounters::kBranches> TraceCounters::entries() const {
  return {{{"peel", peel},
           {"small_degree", small_degree},
           {"special_case", special_case},
           {"hamiltonian", hamiltonian},
           {"eq1_case_a", eq1_case_a},
           {"eq1_case_b", eq1_case_b},
           {"eq1_case_c", eq1_case_c},
           {"eq2_case_common", eq2_case_common},
           {"eq2_case_left", eq2_case_left},
           {"eq2_case_right", eq2_case_right}}};
}

bool TraceCounters::all_positive() const {
  return std::ranges::all_of(entries(), [](const auto& e) { return e.second > 0; });
}

TraceCounters& TraceCounters::operator+=(const TraceCounters& o) {
  peel += o.peel;
  small_degree += o.small_degree;
  special_case += o.special_case;
  hamiltonian += o.hamiltonian;
  eq1_case_a += o.eq1_case_a;
  eq1_case_b += o.eq1_case_b;
  eq1_case_c += o.eq1_case_c;
  eq2_case_common += o.eq2_case_common;
  eq2_case_left += o.eq2_case_left;
  eq2_case_right += o.eq2_case_right;
  return *this;
}

std::string_view to_string(NotApplicableReason reason) {
  switch (reason) {
    case NotApplicableReason::complete_component: return "complete-component";
    case NotApplicableReason::list_too_short: return "list-too-short";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ListAssignment

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& l = lists_[v];
    if (l.empty()) throw std::invalid_argument("empty color list at vertex " + std::to_string(v));
    std::ranges::sort(l);
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool ListAssignment::contains(Vertex v, Color c) const { return has_color((*this)[v], c); }

ListAssignment ListAssignment::restrict_to(std::span<const Vertex> members) const {
  ListAssignment out;
  out.lists_.reserve(members.size());
  for (Vertex v : members) out.lists_.push_back(lists_.at(index(v)));
  return out;
}

// ---------------------------------------------------------------------------
// Steps

ListAssignment trim_lists(const ListAssignment& lists, std::size_t d, std::span<const Vertex> s) {
  std::vector<std::vector<Color>> out = lists.lists();
  for (Vertex v : s) {
    auto& l = out.at(index(v));
    if (l.size() < d) {
      throw InvariantError("list of vertex " + std::to_string(v) + " has " + std::to_string(l.size()) +
                           " colors, fewer than " + std::to_string(d));
    }
    l.resize(d);
  }
  return ListAssignment(std::move(out));
}

PeelResult peel(const Graph& g, std::size_t d) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> deficient;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(static_cast<Vertex>(v));
    check_invariant(degree[v] <= d, "peel called with a vertex above the degree bound");
    if (degree[v] < d) deficient.push(static_cast<Vertex>(v));
  }

  PeelResult result;
  while (!deficient.empty()) {
    const Vertex v = deficient.top();
    deficient.pop();
    if (removed[index(v)]) continue;
    removed[index(v)] = true;
    PeeledVertex entry{v, {}};
    for (Vertex w : g.neighbors(v)) {
      if (removed[index(w)]) continue;
      entry.remaining_neighbors.push_back(w);
      if (degree[index(w)]-- == d) deficient.push(w);
    }
    result.stack.push_back(std::move(entry));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) result.core.push_back(static_cast<Vertex>(v));
  }
  return result;
}

void unwind_peel(std::span<const PeeledVertex> stack, PartialColoring& f, const ListAssignment& lists) {
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    for (Vertex w : it->remaining_neighbors) {
      check_invariant(f[index(w)].has_value(), "peeled vertex has an uncolored later neighbor");
    }
    const auto c = smallest_free(lists[it->vertex], it->remaining_neighbors, f);
    if (!c) {
      throw InvariantError("no free color while unwinding peeled vertex " + std::to_string(it->vertex));
    }
    f[index(it->vertex)] = *c;
  }
}

Triple find_triple(const Graph& h) {
  for (std::size_t mid = 0; mid < h.size(); ++mid) {
    const auto nbrs = h.neighbors(static_cast<Vertex>(mid));
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!h.adjacent(nbrs[i], nbrs[j])) return {nbrs[i], static_cast<Vertex>(mid), nbrs[j]};
      }
    }
  }
  throw InvariantError("find_triple: every neighborhood is a clique");
}

PathOrder extend_to_maximal_path(const Graph& h, PathOrder seed) {
  std::vector<bool> on_path(h.size(), false);
  for (std::size_t i = 0; i < seed.size(); ++i) {
    check_invariant(!on_path[index(seed[i])], "path seed repeats a vertex");
    if (i > 0) check_invariant(h.adjacent(seed[i - 1], seed[i]), "path seed is not a path");
    on_path[index(seed[i])] = true;
  }
  if (seed.empty()) return seed;
  for (;;) {
    const auto nbrs = h.neighbors(seed.back());
    const auto next = std::ranges::find_if(nbrs, [&](Vertex w) { return !on_path[index(w)]; });
    if (next == nbrs.end()) return seed;
    on_path[index(*next)] = true;
    seed.push_back(*next);
  }
}

PathOrder farthest_neighbor_cycle(const Graph& h, std::span<const Vertex> path) {
  check_invariant(!path.empty(), "farthest_neighbor_cycle on an empty path");
  std::vector<std::ptrdiff_t> position(h.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) position[index(path[i])] = static_cast<std::ptrdiff_t>(i);
  std::ptrdiff_t earliest = static_cast<std::ptrdiff_t>(path.size()) - 1;
  for (Vertex w : h.neighbors(path.back())) {
    check_invariant(position[index(w)] >= 0, "last path vertex has a neighbor off the path");
    earliest = std::min(earliest, position[index(w)]);
  }
  return {path.begin() + earliest, path.end()};
}

CycleAnchor choose_cycle_anchor(std::span<const Color> lu, std::span<const Color> lv, Color fw, Fault fault) {
  check_invariant(!lv.empty(), "choose_cycle_anchor with an empty L(v)");
  if (!has_color(lu, fw)) return {lv.front(), AnchorRule::a};
  if (has_color(lv, fw)) return {fw, AnchorRule::b};
  if (fault == Fault::eq1_case_c_smallest) return {lv.front(), AnchorRule::c};
  for (Color c : lv) {
    if (!has_color(lu, c)) return {c, AnchorRule::c};
  }
  throw InvariantError("choose_cycle_anchor: L(v) is contained in L(u) although f(w) separates them");
}

TripleAnchor choose_triple_anchor(std::span<const Color> l1, std::span<const Color> l2, std::span<const Color> l3) {
  check_invariant(!l1.empty() && !l3.empty(), "choose_triple_anchor with an empty list");
  std::vector<Color> common;
  std::ranges::set_intersection(l1, l3, std::back_inserter(common));
  if (!common.empty()) return {common.front(), common.front(), AnchorRule::a};
  for (Color c : l1) {
    if (!has_color(l2, c)) return {c, l3.front(), AnchorRule::b};
  }
  check_invariant(std::ranges::none_of(l3, [&](Color c) { return has_color(l2, c); }),
                  "choose_triple_anchor: L1 inside L2 but L3 meets L2 (unequal list sizes?)");
  return {l1.front(), l3.front(), AnchorRule::c};
}

void greedy_color_sequence(std::span<const Vertex> order, const Graph& h, const ListAssignment& lists,
                           PartialColoring& f) {
  for (Vertex v : order) {
    const auto c = smallest_free(lists[v], h.neighbors(v), f);
    if (!c) {
      throw InvariantError("greedy sweep starved at vertex " + std::to_string(v) + ": all " +
                           std::to_string(lists[v].size()) + " list colors used by neighbors");
    }
    f[index(v)] = *c;
  }
}

PartialColoring color_regular_core(const Graph& h, const ListAssignment& lists, std::size_t d,
                                   TraceCounters& counters, const ChooserOptions& options) {
  check_invariant(d >= 3, "regular core needs degree >= 3");
  for (std::size_t v = 0; v < h.size(); ++v) {
    check_invariant(h.degree(static_cast<Vertex>(v)) == d, "core is not regular");
    check_invariant(lists[static_cast<Vertex>(v)].size() == d, "core list size differs from the degree");
  }
  const Triple t = find_triple(h);
  const PathOrder path = extend_to_maximal_path(h, {t.first, t.middle, t.last});
  const PathOrder cycle = farthest_neighbor_cycle(h, path);
  if (cycle.size() < h.size()) return handle_special_case(h, lists, cycle, counters, options);
  return handle_hamiltonian(h, lists, cycle, counters);
}

PartialColoring handle_special_case(const Graph& h, const ListAssignment& lists, std::span<const Vertex> cycle,
                                    TraceCounters& counters, const ChooserOptions& options) {
  ++counters.special_case;
  const std::size_t n = h.size();
  const std::size_t k = cycle.size();
  check_invariant(k >= 3 && k < n, "special case needs a proper cycle shorter than the graph");

  std::vector<bool> on_cycle(n, false);
  for (Vertex c : cycle) on_cycle[index(c)] = true;
  auto has_outside_neighbor = [&](Vertex x) {
    return std::ranges::any_of(h.neighbors(x), [&](Vertex y) { return !on_cycle[index(y)]; });
  };
  check_invariant(!has_outside_neighbor(cycle[k - 1]), "last cycle vertex has a neighbor off the cycle");

  // Walk c[k-1], c[0], c[1], ... and stop at the first vertex with an
  // outside neighbor.
  std::size_t pu = k;
  for (std::size_t step = 1; step < k; ++step) {
    const std::size_t p = (k - 1 + step) % k;
    if (has_outside_neighbor(cycle[p])) {
      pu = p;
      break;
    }
  }
  check_invariant(pu < k, "no cycle vertex reaches outside the cycle in a connected graph");
  const std::size_t pv = (pu + k - 1) % k;
  const Vertex u = cycle[pu];
  const Vertex v = cycle[pv];
  const Vertex w = *std::ranges::find_if(h.neighbors(u), [&](Vertex y) { return !on_cycle[index(y)]; });

  PartialColoring f(n);
  VertexSubset rest;
  for (std::size_t x = 0; x < n; ++x) {
    if (!on_cycle[x]) rest.push_back(static_cast<Vertex>(x));
  }
  {
    const Subgraph sub = induced_subgraph(h, rest);
    ChooseResult inner = list_color(sub.graph, lists.restrict_to(sub.to_parent), options);
    counters += inner.counters;
    const auto* ok = std::get_if<Success>(&inner.outcome);
    check_invariant(ok != nullptr, "coloring the graph minus the cycle did not succeed");
    for (std::size_t i = 0; i < ok->coloring.size(); ++i) f[index(sub.to_parent[i])] = ok->coloring[i];
  }

  const Color fw = *f[index(w)];
  const CycleAnchor anchor = choose_cycle_anchor(lists[u], lists[v], fw, options.fault);
  count_cycle_anchor(counters, anchor.rule);
  f[index(v)] = anchor.color;
  check_invariant(overlap_with(lists[u], anchor.color, fw) <= 1, "anchor inequality |L(u) ∩ {f(v), f(w)}| <= 1 failed");

  // v, then away from u around the cycle, ending at u.
  std::vector<Vertex> order;
  order.reserve(k - 1);
  for (std::size_t s = 1; s < k; ++s) order.push_back(cycle[(pv + k - s) % k]);
  greedy_color_sequence(order, h, lists, f);
  return f;
}

PathOrder sigma_order(const Graph& h, std::span<const Vertex> cycle) {
  const std::size_t n = cycle.size();
  check_invariant(n >= 4 && n == h.size(), "sigma order needs a Hamiltonian cycle on >= 4 vertices");
  const Vertex v2 = cycle[1];
  // 0-based position of v_j
  std::size_t pj = n;
  for (std::size_t p = 3; p < n; ++p) {
    if (h.adjacent(v2, cycle[p])) {
      pj = p;
      break;
    }
  }
  check_invariant(pj < n, "v2 has no neighbor besides v1 and v3");

  PathOrder sigma;
  sigma.reserve(n);
  sigma.push_back(cycle[0]);
  for (std::size_t p = 2; p < pj; ++p) sigma.push_back(cycle[p]);
  for (std::size_t p = n - 1; p >= pj; --p) sigma.push_back(cycle[p]);
  sigma.push_back(v2);
  return sigma;
}

PartialColoring handle_hamiltonian(const Graph& h, const ListAssignment& lists, std::span<const Vertex> cycle,
                                   TraceCounters& counters) {
  ++counters.hamiltonian;
  const std::size_t n = h.size();
  check_invariant(cycle.size() == n, "hamiltonian branch needs a spanning cycle");
  const Vertex v1 = cycle[0];
  const Vertex v2 = cycle[1];
  const Vertex v3 = cycle[2];
  check_invariant(h.adjacent(v1, cycle[n - 1]), "cycle does not close");
  check_invariant(!h.adjacent(v1, v3), "v1 and v3 are adjacent");

  const PathOrder sigma = sigma_order(h, cycle);

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[index(sigma[i])] = i;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto nbrs = h.neighbors(sigma[i]);
    check_invariant(std::ranges::any_of(nbrs, [&](Vertex y) { return position[index(y)] > i; }),
                    "sigma vertex without a later neighbor");
  }

  const TripleAnchor anchor = choose_triple_anchor(lists[v1], lists[v2], lists[v3]);
  count_triple_anchor(counters, anchor.rule);
  PartialColoring f(n);
  f[index(v1)] = anchor.first;
  f[index(v3)] = anchor.last;
  check_invariant(overlap_with(lists[v2], anchor.first, anchor.last) <= 1,
                  "anchor inequality |L(v2) ∩ {f(v1), f(v3)}| <= 1 failed");

  greedy_color_sequence(std::span(sigma).subspan(2), h, lists, f);
  return f;
}

Outcome color_small_degree(const Graph& h, const ListAssignment& lists) {
  const std::size_t n = h.size();
  check_invariant(n >= 1 && max_degree(h) <= 2, "small-degree routine needs max degree <= 2");
  const VertexSubset all = all_vertices(n);
  if (n == 1) return Success{{lists[0].front()}};

  auto list_size = [&](Vertex v) { return lists[v].size(); };
  PartialColoring f(n);

  if (h.edge_count() == n - 1) {
    std::vector<Vertex> ends;
    for (Vertex v : all) {
      if (h.degree(v) == 1) ends.push_back(v);
      else if (list_size(v) < 2) return NotApplicable{NotApplicableReason::list_too_short, all};
    }
    check_invariant(ends.size() == 2, "path component without two endpoints");
    if (list_size(ends[0]) < 2 && list_size(ends[1]) < 2) {
      return NotApplicable{NotApplicableReason::list_too_short, all};
    }
    // Start the sweep at a one-color endpoint if there is one.
    const Vertex start = list_size(ends[1]) < 2 ? ends[1] : ends[0];
    const std::vector<Vertex> order = walk(h, start, h.neighbors(start).front());
    greedy_color_sequence(order, h, lists, f);
    return Success{to_total(f)};
  }

  check_invariant(h.edge_count() == n, "max-degree-2 component is neither a path nor a cycle");
  if (std::ranges::any_of(all, [&](Vertex v) { return list_size(v) < 2; })) {
    return NotApplicable{NotApplicableReason::list_too_short, all};
  }

  // A vertex with three or more colors goes last.
  if (const auto big = std::ranges::find_if(all, [&](Vertex v) { return list_size(v) >= 3; }); big != all.end()) {
    const Vertex z = *big;
    std::vector<Vertex> order = walk(h, z, h.neighbors(z)[0]);
    std::rotate(order.begin(), order.begin() + 1, order.end());  // z last
    greedy_color_sequence(order, h, lists, f);
    return Success{to_total(f)};
  }

  // All lists have two colors: break the cycle at an edge with unequal lists.
  for (Vertex x : all) {
    for (Vertex y : h.neighbors(x)) {
      if (std::ranges::equal(lists[x], lists[y])) continue;
      const Color fx = *std::ranges::find_if(lists[x], [&](Color c) { return !has_color(lists[y], c); });
      f[index(x)] = fx;
      const Vertex away = h.neighbors(x)[0] == y ? h.neighbors(x)[1] : h.neighbors(x)[0];
      const std::vector<Vertex> order = walk(h, x, away);  // x, ..., y
      greedy_color_sequence(std::span(order).subspan(1), h, lists, f);
      return Success{to_total(f)};
    }
  }

  if (n % 2 == 0) {
    greedy_color_sequence(walk(h, 0, h.neighbors(0)[0]), h, lists, f);
    return Success{to_total(f)};
  }
  const auto l = lists[0];
  return Infeasible{"odd cycle of length " + std::to_string(n) + " with every list {" + std::to_string(l[0]) +
                        ", " + std::to_string(l[1]) + "}",
                    all};
}

// ---------------------------------------------------------------------------

ChooseResult list_color(const Graph& g, const ListAssignment& lists, const ChooserOptions& options) {
  if (lists.size() != g.size()) {
    throw std::invalid_argument("list assignment covers " + std::to_string(lists.size()) + " vertices, graph has " +
                                std::to_string(g.size()));
  }
  ChooseResult result{Success{Coloring(g.size())}, {}};
  auto& coloring = std::get<Success>(result.outcome).coloring;

  const auto components = connected_components(g);
  if (components.size() == 1) {
    Outcome out = color_connected(g, lists, result.counters, options);
    result.outcome = std::move(out);
    return result;
  }

  for (const auto& comp : components) {
    const Subgraph sub = induced_subgraph(g, comp);
    Outcome out = color_connected(sub.graph, lists.restrict_to(comp), result.counters, options);
    if (auto* ok = std::get_if<Success>(&out)) {
      for (std::size_t i = 0; i < comp.size(); ++i) coloring[index(comp[i])] = ok->coloring[i];
      continue;
    }
    // Report the failing component in the caller's ids.
    std::visit(
        [&](auto& bad) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(bad)>, Success>) {
            for (auto& x : bad.component) x = sub.to_parent[index(x)];
          }
        },
        out);
    result.outcome = std::move(out);
    return result;
  }
  return result;
}

}  // namespace brooks
