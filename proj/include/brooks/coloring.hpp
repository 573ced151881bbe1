#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

/// Colors are opaque non-negative integers; no palette normalization.
using Color = std::uint64_t;

/// Per-vertex color lists L(v). Each list is kept sorted and duplicate-free
/// and is never empty.
class ListAssignment {
 public:
  ListAssignment() = default;

  /// Sorts and deduplicates every list. Throws std::invalid_argument if a
  /// list is empty.
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  std::size_t size() const noexcept { return lists_.size(); }
  std::span<const Color> operator[](Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  bool contains(Vertex v, Color c) const;

  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

  /// Lists restricted to `members`, reindexed 0..|members|-1.
  ListAssignment restrict_to(std::span<const Vertex> members) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// f(v) while a coloring is being built; nullopt means uncolored.
using PartialColoring = std::vector<std::optional<Color>>;

/// A total coloring.
using Coloring = std::vector<Color>;

/// Raised when an internal invariant of the construction is broken. These
/// indicate bugs or violated preconditions, never infeasibility.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool holds, const char* what) {
  if (!holds) throw InvariantError(what);
}

}  // namespace brooks
