#pragma once

#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

/// Branch-and-bound maximum independent set with a node budget.
/// `alpha` is the true independence number when `exact`, otherwise a
/// certified lower bound (the witness is independent either way).
struct MisResult {
  int alpha = 0;
  std::vector<int> witness;
  bool exact = true;
  long long nodes = 0;
};

inline constexpr long long kDefaultMisBudget = 20'000'000;

MisResult max_independent_set(const Graph& g,
                              long long node_budget = kDefaultMisBudget);

}  // namespace girthforge
