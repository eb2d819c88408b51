#pragma once

#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

inline constexpr int kChromaticCap = 20;

/// Exact chromatic number, n <= 20 (inclusion-exclusion over vertex
/// subsets, exact big-integer arithmetic).  Throws InstanceTooLarge
/// above the cap.  `coloring[v]` is a proper witness in 1..chi.
struct ChromaticResult {
  int chi = 0;
  std::vector<int> coloring;
};

ChromaticResult chromatic_number_exact(const Graph& g);

}  // namespace girthforge
