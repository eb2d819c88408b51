#include <doctest.h>

#include "girthforge/monotone.hpp"
#include "oracles.hpp"

using namespace girthforge;

TEST_CASE("monotone reachability matches path enumeration") {
  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = oracles::random_graph(8, 500 + s, 1, 3);
    auto reach = monotone_reachability(g);
    for (int x = 1; x <= g.n(); ++x)
      for (int y = x + 1; y <= g.n(); ++y)
        CHECK(reach[x].test(y) ==
              !oracles::brute_monotone_paths(g, x, y).empty());
  }
}

TEST_CASE("saturating path counts") {
  // Edgeless: the source reaches only itself (by the empty path).
  auto cnt = saturating_path_counts(4, {}, 1);
  CHECK(cnt[1] == PathCount::One);
  for (int v = 2; v <= 4; ++v) CHECK(cnt[v] == PathCount::Zero);

  // Diamond 1->2->4, 1->3->4: two paths to 4.
  auto dia = saturating_path_counts(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, 1);
  CHECK(dia[2] == PathCount::One);
  CHECK(dia[3] == PathCount::One);
  CHECK(dia[4] == PathCount::Many);

  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = oracles::random_graph(8, 600 + s, 1, 3);
    auto c = saturating_path_counts(g.n(), g.edges(), 1);
    for (int y = 2; y <= g.n(); ++y) {
      size_t exact = oracles::brute_monotone_paths(g, 1, y).size();
      CHECK(int(c[y]) == int(std::min<size_t>(exact, 2)));
    }
  }
}

TEST_CASE("edge disjoint monotone path pairs match brute force") {
  // Triangle: 1->3 direct and 1->2->3 are edge disjoint.
  Graph tri = Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(has_two_edge_disjoint_monotone_paths(tri, 1, 3));
  CHECK_FALSE(has_two_edge_disjoint_monotone_paths(tri, 1, 2));

  // Path graph: only one monotone path anywhere.
  Graph path = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(has_two_edge_disjoint_monotone_paths(path, 1, 4));

  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = oracles::random_graph(8, 700 + s, 2, 5);
    for (int x = 1; x <= g.n(); ++x)
      for (int y = x + 1; y <= g.n(); ++y)
        CHECK(has_two_edge_disjoint_monotone_paths(g, x, y) ==
              oracles::brute_two_edge_disjoint(g, x, y));
  }
}

TEST_CASE("bad pair listing matches brute force") {
  Graph dia = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(list_bad_pairs(dia) == std::vector<std::pair<int, int>>{{1, 4}});

  for (uint64_t s = 0; s < 40; ++s) {
    Graph g = oracles::random_graph(8, 800 + s, 1 + s % 2, 3);
    CHECK(list_bad_pairs(g) == oracles::brute_bad_pairs(g));
  }
}
