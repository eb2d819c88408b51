#pragma once

#include <utility>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

/// Monotone-path machinery.  A monotone path has strictly increasing
/// integer labels along it; the DAG orientation of an undirected graph
/// always points from the smaller label to the larger.

/// reach[x] is the bitset of y > x reachable from x by a monotone path.
std::vector<Bitset> monotone_reachability(const Graph& g);

enum class PathCount : uint8_t { Zero = 0, One = 1, Many = 2 };

/// Per-vertex count of directed source->y paths, saturated at 2, in a
/// DAG given by increasing-label edges.  Saturating addition keeps the
/// computation overflow-free regardless of the true path counts.
std::vector<PathCount> saturating_path_counts(
    int n, const std::vector<std::pair<int, int>>& dag_edges, int source);

/// True iff there are >= 2 pairwise edge-disjoint monotone x->y paths
/// (max-flow with unit edge capacities on the label-oriented DAG).
bool has_two_edge_disjoint_monotone_paths(const Graph& g, int x, int y);

/// All pairs x<y joined by two edge-disjoint monotone paths.  Pairs
/// are prefiltered by monotone reachability and by the saturated path
/// count (a bad pair necessarily has >= 2 distinct monotone paths);
/// the flow check runs only on the survivors.
std::vector<std::pair<int, int>> list_bad_pairs(const Graph& g);

}  // namespace girthforge
