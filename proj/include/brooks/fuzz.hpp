#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brooks/chooser.hpp"
#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"
#include "brooks/instances.hpp"

namespace brooks {

struct FuzzConfig {
  std::uint64_t trials = 0;
  Seed seed = 1;
  std::size_t nmax = 60;
  std::size_t oracle_nmax = 9;
  Fault fault = Fault::none;
};

struct FuzzInstance {
  Graph graph;
  ListAssignment lists;
  Seed trial_seed = 0;
};

/// Instance number `trial` of the run seeded with `seed`. About two in five
/// instances have at most `oracle_nmax` vertices; the rest up to `nmax`.
/// Half come from the random regular generator (d in 3..6), half from the
/// random connected generator (dmax in 1..6). Every component gets lists of
/// size max(2, component max degree). Half of the components draw lists
/// independently over a palette of size in [size, 2*size]; the other half
/// pick among three lists over a palette of 2*size, two of them
/// complementary.
FuzzInstance make_fuzz_instance(Seed seed, std::uint64_t trial, std::size_t nmax, std::size_t oracle_nmax);

struct FuzzFailure {
  std::uint64_t trial;
  Seed trial_seed;
  std::string reason;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_infeasible = 0;  // chooser Infeasible confirmed by the oracle
  std::uint64_t failure_count = 0;
  std::vector<FuzzFailure> failures;  // first few, in trial order
  TraceCounters counters;

  bool passed() const { return failure_count == 0 && counters.all_positive(); }
};

/// Runs the chooser on `config.trials` instances. Every Success is
/// verified; instances of at most `oracle_nmax` vertices are also solved by
/// the exact oracle and the two answers compared. Components that satisfy
/// the theorem's hypotheses must succeed.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace brooks
