#include "brooks/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace brooks {

namespace {

constexpr int kMaxRestarts = 1000;
constexpr int kQuickTries = 64;

std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }

bool linked(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b) {
  const auto& shorter = adj[index(a)].size() <= adj[index(b)].size() ? adj[index(a)] : adj[index(b)];
  const Vertex other = &shorter == &adj[index(a)] ? b : a;
  return std::ranges::find(shorter, other) != shorter.end();
}

// Attempts one full random pairing of the stubs; empty optional when the
// pairing gets stuck.
std::optional<EdgeList> try_pairing(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, static_cast<Vertex>(v));
  std::vector<std::vector<Vertex>> adj(n);
  EdgeList edges;
  edges.reserve(n * d / 2);

  auto take = [&](std::size_t i, std::size_t j) {
    const Vertex a = stubs[i];
    const Vertex b = stubs[j];
    adj[index(a)].push_back(b);
    adj[index(b)].push_back(a);
    edges.emplace_back(a, b);
    // remove the larger index first so the smaller stays valid
    for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
      stubs[k] = stubs.back();
      stubs.pop_back();
    }
  };
  auto suitable = [&](std::size_t i, std::size_t j) {
    return stubs[i] != stubs[j] && !linked(adj, stubs[i], stubs[j]);
  };

  while (!stubs.empty()) {
    bool paired = false;
    for (int t = 0; t < kQuickTries && !paired; ++t) {
      const std::size_t i = rng.below(stubs.size());
      const std::size_t j = rng.below(stubs.size());
      if (i != j && suitable(i, j)) {
        take(i, j);
        paired = true;
      }
    }
    if (paired) continue;
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < stubs.size(); ++i) {
      for (std::size_t j = i + 1; j < stubs.size(); ++j) {
        if (suitable(i, j)) options.emplace_back(i, j);
      }
    }
    if (options.empty()) return std::nullopt;
    const auto [i, j] = options[rng.below(options.size())];
    take(i, j);
  }
  return edges;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Seed mix_seed(Seed seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NamedKind parse_named_kind(std::string_view name) {
  if (name == "cycle") return NamedKind::cycle;
  if (name == "path") return NamedKind::path;
  if (name == "complete") return NamedKind::complete;
  if (name == "petersen") return NamedKind::petersen;
  if (name == "prism") return NamedKind::prism;
  throw GeneratorError("unknown graph kind '" + std::string(name) + "'");
}

Graph gen_named(NamedKind kind, std::size_t n) {
  EdgeList edges;
  auto ring = [&](std::size_t offset, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(static_cast<Vertex>(offset + i), static_cast<Vertex>(offset + (i + 1) % len));
    }
  };
  switch (kind) {
    case NamedKind::cycle:
      if (n < 3) throw GeneratorError("cycle needs n >= 3");
      ring(0, n);
      return Graph::from_edges(n, edges);
    case NamedKind::path:
      if (n < 1) throw GeneratorError("path needs n >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
      return Graph::from_edges(n, edges);
    case NamedKind::complete:
      if (n < 1) throw GeneratorError("complete graph needs n >= 1");
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
      return Graph::from_edges(n, edges);
    case NamedKind::petersen: {
      ring(0, 5);
      for (Vertex i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
      const Vertex inner[] = {5, 7, 9, 6, 8};
      for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(inner[i], inner[(i + 1) % 5]);
      return Graph::from_edges(10, edges);
    }
    case NamedKind::prism: {
      const std::size_t k = n == 0 ? 3 : n;
      if (k < 3) throw GeneratorError("prism needs rings of length >= 3");
      ring(0, k);
      ring(k, k);
      for (std::size_t i = 0; i < k; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + k));
      return Graph::from_edges(2 * k, edges);
    }
  }
  throw GeneratorError("unknown graph kind");
}

Graph gen_random_regular(std::size_t n, std::size_t d, Seed seed) {
  if ((n * d) % 2 != 0) {
    throw GeneratorError("n*d must be even for a d-regular graph (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  if (d >= n) throw GeneratorError("d-regular graph needs d < n");
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    if (auto edges = try_pairing(n, d, rng)) return Graph::from_edges(n, *edges);
  }
  throw GeneratorError("pairing model failed " + std::to_string(kMaxRestarts) + " times");
}

Graph gen_random_connected(std::size_t n, std::size_t dmax, Seed seed) {
  if (n < 1) throw GeneratorError("connected graph needs n >= 1");
  if (dmax < 1 && n > 1) throw GeneratorError("dmax must be >= 1");
  if (dmax == 1 && n > 2) throw GeneratorError("no connected graph on more than 2 vertices has max degree 1");
  Rng rng(seed);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(order);

  std::vector<std::vector<Vertex>> adj(n);
  EdgeList edges;
  // Vertices below the degree cap, with their slot in `open`.
  std::vector<Vertex> open;
  std::vector<std::size_t> slot(n, 0);
  auto open_vertex = [&](Vertex v) {
    slot[index(v)] = open.size();
    open.push_back(v);
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[index(a)].push_back(b);
    adj[index(b)].push_back(a);
    edges.emplace_back(a, b);
    for (Vertex x : {a, b}) {
      if (adj[index(x)].size() == dmax) {
        const Vertex moved = open.back();
        open[slot[index(x)]] = moved;
        slot[index(moved)] = slot[index(x)];
        open.pop_back();
      }
    }
  };

  open_vertex(order[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex parent = open[rng.below(open.size())];
    open_vertex(order[i]);
    add_edge(order[i], parent);
  }

  const std::uint64_t extra_attempts = rng.below(static_cast<std::uint64_t>(n) * dmax + 1);
  for (std::uint64_t t = 0; t < extra_attempts && open.size() >= 2; ++t) {
    const Vertex a = open[rng.below(open.size())];
    const Vertex b = open[rng.below(open.size())];
    if (a != b && !linked(adj, a, b)) add_edge(a, b);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Color> random_list(Rng& rng, std::size_t size, std::size_t palette) {
  if (size < 1 || palette < size) {
    throw GeneratorError("list size must be in [1, palette] (size=" + std::to_string(size) +
                         ", palette=" + std::to_string(palette) + ")");
  }
  std::vector<Color> pool(palette);
  std::iota(pool.begin(), pool.end(), Color{1});
  for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(palette - i)]);
  pool.resize(size);
  std::ranges::sort(pool);
  return pool;
}

ListAssignment gen_lists(const Graph& g, std::size_t size, std::size_t palette, Seed seed) {
  Rng rng(seed);
  std::vector<std::vector<Color>> lists;
  lists.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) lists.push_back(random_list(rng, size, palette));
  if (g.size() == 0) random_list(rng, size, palette);  // still validate the arguments
  return ListAssignment(std::move(lists));
}

}  // namespace brooks
