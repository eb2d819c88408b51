#pragma once

#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

/// Girth of a graph: shortest cycle length, or infinite for forests.
/// "girth at least r" is true for the infinite value.
struct Girth {
  bool finite = false;
  int value = 0;              // >= 3 when finite
  std::vector<int> witness;   // a cycle of exactly `value` vertices

  bool at_least(int r) const { return !finite || value >= r; }
};

Girth girth(const Graph& g);

/// Enumeration of all cycles of length <= max_len, each cycle counted
/// once as an equivalence class under rotation and reflection.
/// `cap_exceeded` is a marker, not an error: it is set when either the
/// cycle count or the internal search work passes its cap, and signals
/// that the caller should resample or fall back to incremental repair
/// rather than rely on the (then incomplete) enumeration.
struct CycleEnumeration {
  long long count = 0;
  bool cap_exceeded = false;
  std::vector<std::vector<int>> witnesses;  // complete when !cap_exceeded
};

inline constexpr long long kDefaultCycleCap = 200'000;

// Counts cycles of length <= r-1 ("shorter than r").
CycleEnumeration count_short_cycles(const Graph& g, int r,
                                    long long cap = kDefaultCycleCap);

}  // namespace girthforge
