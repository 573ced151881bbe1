#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>

#include "brooks/coloring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

/// Per-branch hit counters. Monotone during a run.
struct TraceCounters {
  std::uint64_t peel = 0;          // vertices removed by peeling
  std::uint64_t small_degree = 0;  // components with max degree <= 2
  std::uint64_t special_case = 0;  // regular cores split along a short cycle
  std::uint64_t hamiltonian = 0;   // regular cores colored along the sigma order
  std::uint64_t eq1_case_a = 0;    // f(w) not in L(u)
  std::uint64_t eq1_case_b = 0;    // f(w) in L(u) and L(v)
  std::uint64_t eq1_case_c = 0;    // f(w) in L(u) only
  std::uint64_t eq2_case_common = 0;
  std::uint64_t eq2_case_left = 0;
  std::uint64_t eq2_case_right = 0;

  static constexpr std::size_t kBranches = 10;

  /// (name, value) pairs in a fixed order; names are the `branch=` keys
  /// printed by the CLI.
  std::array<std::pair<std::string_view, std::uint64_t>, kBranches> entries() const;

  /// True when every branch was hit at least once.
  bool all_positive() const;

  TraceCounters& operator+=(const TraceCounters& other);
  friend bool operator==(const TraceCounters&, const TraceCounters&) = default;
};

enum class NotApplicableReason { complete_component, list_too_short };

std::string_view to_string(NotApplicableReason reason);

struct Success {
  Coloring coloring;
};

/// Only produced for components of max degree <= 2 (identical 2-lists on
/// an odd cycle).
struct Infeasible {
  std::string witness;
  VertexSubset component;
};

/// The instance is outside what the construction promises.
struct NotApplicable {
  NotApplicableReason reason;
  VertexSubset component;
};

using Outcome = std::variant<Success, Infeasible, NotApplicable>;

/// Deliberate defects used to check that the fuzz harness notices broken
/// anchor rules. Never set outside of harness validation.
enum class Fault {
  none,
  eq1_case_c_smallest,  // anchor rule (c) returns min L(v) instead of min L(v)\L(u)
};

struct ChooserOptions {
  Fault fault = Fault::none;
};

struct ChooseResult {
  Outcome outcome;
  TraceCounters counters;
};

/// Colors `g` from `lists`, one connected component at a time.
///
/// For a component H of max degree d:
///   - d <= 2: exact routine for paths and cycles;
///   - d >= 3 and H = K_{d+1}: greedy if every list has more than d colors,
///     otherwise NotApplicable(complete_component);
///   - d >= 3 and a list shorter than d: NotApplicable(list_too_short);
///   - otherwise lists are trimmed to their d smallest colors and the
///     component is peeled, its regular core colored, and the peel unwound.
///     This case always succeeds.
///
/// Processing stops at the first component that does not succeed. The
/// result is a pure function of the inputs. Throws InvariantError on an
/// internal failure and std::invalid_argument if `lists` does not cover
/// `g`.
ChooseResult list_color(const Graph& g, const ListAssignment& lists, const ChooserOptions& options = {});

}  // namespace brooks
