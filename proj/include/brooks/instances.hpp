#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

using Seed = std::uint64_t;

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic source of randomness for every generator in the library.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Bounded draws use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm varies between
/// standard libraries. A seed therefore reproduces the same instance on
/// every platform.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent sub-seeds.
Seed mix_seed(Seed seed, std::uint64_t stream);

enum class NamedKind { cycle, path, complete, petersen, prism };

NamedKind parse_named_kind(std::string_view name);

/// Canonically labeled fixtures:
///   cycle n    edges (i, i+1 mod n), n >= 3
///   path n     edges (i, i+1), n >= 1
///   complete n all pairs, n >= 1
///   petersen   outer 0..4, spokes i-(i+5), inner cycle 5-7-9-6-8 (n ignored)
///   prism n    triangles/rings 0..n-1 and n..2n-1 with rungs i-(i+n);
///              n = 0 means the triangular prism
Graph gen_named(NamedKind kind, std::size_t n = 0);

/// Simple d-regular graph from the pairing model: stubs are matched at
/// random, a pairing that cannot be completed without a loop or a repeated
/// edge is discarded and restarted. Not necessarily connected.
Graph gen_random_regular(std::size_t n, std::size_t d, Seed seed);

/// Connected graph with max degree <= dmax: random spanning tree grown
/// under the degree cap, plus random extra edges under the same cap.
Graph gen_random_connected(std::size_t n, std::size_t dmax, Seed seed);

/// Each vertex gets a uniform random `size`-subset of {1, ..., palette}.
ListAssignment gen_lists(const Graph& g, std::size_t size, std::size_t palette, Seed seed);

/// One uniform `size`-subset of {1, ..., palette}, sorted.
std::vector<Color> random_list(Rng& rng, std::size_t size, std::size_t palette);

}  // namespace brooks
