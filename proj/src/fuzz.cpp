#include "brooks/fuzz.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "brooks/checking.hpp"

namespace brooks {

namespace {

constexpr std::size_t kKeptFailures = 10;

struct TrialFailure {
  std::string reason;
};

[[noreturn]] void fail(std::string reason) { throw TrialFailure{std::move(reason)}; }

std::string kind_of(const Outcome& outcome) {
  if (std::holds_alternative<Success>(outcome)) return "success";
  if (std::holds_alternative<Infeasible>(outcome)) return "infeasible";
  return "not-applicable(" + std::string(to_string(std::get<NotApplicable>(outcome).reason)) + ")";
}

// Outcome contract for a single connected component with fuzz-sized lists
// (never shorter than max(2, d)).
void check_component_outcome(const Graph& h, const ListAssignment& lists, const Outcome& outcome) {
  const std::size_t d = max_degree(h);
  const bool complete = d >= 3 && h.size() == d + 1 && is_complete(h, connected_components(h).front());
  if (const auto* ok = std::get_if<Success>(&outcome)) {
    const auto violations = verify_coloring(h, lists, ok->coloring);
    if (!violations.empty()) fail("verifier: " + describe(violations.front()));
    return;
  }
  if (d >= 3 && !complete) fail("theorem instance (d=" + std::to_string(d) + ") returned " + kind_of(outcome));
  if (std::holds_alternative<Infeasible>(outcome) && d > 2) fail("Infeasible outside the max-degree-2 routine");
  if (const auto* na = std::get_if<NotApplicable>(&outcome)) {
    if (na->reason != NotApplicableReason::complete_component || !complete) {
      fail("unexpected " + kind_of(outcome));
    }
  }
}

void run_trial(const FuzzInstance& inst, const FuzzConfig& config, FuzzReport& report) {
  const Graph& g = inst.graph;
  const ChooserOptions options{config.fault};
  const ChooseResult result = list_color(g, inst.lists, options);
  report.counters += result.counters;

  if (const auto* ok = std::get_if<Success>(&result.outcome)) {
    ++report.successes;
    const auto violations = verify_coloring(g, inst.lists, ok->coloring);
    if (!violations.empty()) fail("verifier: " + describe(violations.front()));
  } else {
    if (std::holds_alternative<Infeasible>(result.outcome)) ++report.infeasible;
    else ++report.not_applicable;
    // The run stopped at the first failing component; check each one.
    for (const auto& comp : connected_components(g)) {
      const Subgraph sub = induced_subgraph(g, comp);
      const ListAssignment sub_lists = inst.lists.restrict_to(comp);
      check_component_outcome(sub.graph, sub_lists, list_color(sub.graph, sub_lists, options).outcome);
    }
  }

  if (g.size() > config.oracle_nmax) return;
  ++report.oracle_checked;
  const ExactResult exact = solve_exact(g, inst.lists);
  if (exact.status == ExactStatus::limit_exceeded) fail("oracle node limit exceeded");
  if (exact.status == ExactStatus::found && !verify_coloring(g, inst.lists, exact.coloring).empty()) {
    fail("oracle returned an invalid coloring");
  }
  if (std::holds_alternative<Success>(result.outcome) && exact.status != ExactStatus::found) {
    fail("chooser succeeded but oracle reports infeasible");
  }
  if (std::holds_alternative<Infeasible>(result.outcome)) {
    if (exact.status != ExactStatus::infeasible) fail("chooser reports infeasible but oracle found a coloring");
    ++report.oracle_infeasible;
  }
}

}  // namespace

FuzzInstance make_fuzz_instance(Seed seed, std::uint64_t trial, std::size_t nmax, std::size_t oracle_nmax) {
  FuzzInstance inst;
  inst.trial_seed = mix_seed(seed, trial);
  Rng rng(inst.trial_seed);

  const bool small = rng.below(5) < 2;
  const std::size_t top = std::max<std::size_t>(1, small ? std::min(oracle_nmax, nmax) : nmax);
  const bool regular = rng.below(2) == 0 && top >= 4;
  if (regular) {
    const std::size_t d = rng.between(3, std::min<std::size_t>(6, top - 1));
    std::size_t n = rng.between(d + 1, top);
    if ((n * d) % 2 != 0) n = n + 1 <= top ? n + 1 : n - 1;
    inst.graph = gen_random_regular(n, d, rng.next());
  } else {
    const std::size_t dmax = rng.between(1, 6);
    std::size_t n = rng.between(1, top);
    if (dmax == 1) n = std::min<std::size_t>(n, 2);
    inst.graph = gen_random_connected(n, dmax, rng.next());
  }

  std::vector<std::vector<Color>> lists(inst.graph.size());
  for (const auto& comp : connected_components(inst.graph)) {
    std::size_t d = 0;
    for (Vertex v : comp) d = std::max(d, inst.graph.degree(v));
    const std::size_t size = std::max<std::size_t>(2, d);
    if (rng.below(2) == 0) {
      const std::size_t palette = rng.between(size, 2 * size);
      for (Vertex v : comp) lists[static_cast<std::size_t>(v)] = random_list(rng, size, palette);
      continue;
    }
    // Palette of 2*size split into a random list and its complement, plus
    // one more random list; every vertex takes one of the three.
    std::vector<std::vector<Color>> templates{random_list(rng, size, 2 * size), {}, random_list(rng, size, 2 * size)};
    for (Color c = 1; c <= 2 * size; ++c) {
      if (!std::ranges::binary_search(templates[0], c)) templates[1].push_back(c);
    }
    for (Vertex v : comp) lists[static_cast<std::size_t>(v)] = templates[rng.below(templates.size())];
  }
  inst.lists = ListAssignment(std::move(lists));
  return inst;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    ++report.trials;
    Seed trial_seed = mix_seed(config.seed, trial);
    std::string reason;
    try {
      const FuzzInstance inst = make_fuzz_instance(config.seed, trial, config.nmax, config.oracle_nmax);
      run_trial(inst, config, report);
      continue;
    } catch (const TrialFailure& f) {
      reason = f.reason;
    } catch (const InvariantError& e) {
      reason = std::string("invariant: ") + e.what();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    ++report.failure_count;
    if (report.failures.size() < kKeptFailures) report.failures.push_back({trial, trial_seed, std::move(reason)});
  }
  return report;
}

}  // namespace brooks
