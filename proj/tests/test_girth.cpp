#include <doctest.h>

#include "girthforge/girth.hpp"
#include "oracles.hpp"

using namespace girthforge;

namespace {

Graph petersen() {
  // Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -> i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);
    e.emplace_back(i + 6, (i + 2) % 5 + 6);
    e.emplace_back(i + 1, i + 6);
  }
  return Graph::from_edges(10, e);
}

bool is_cycle_in(const Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3) return false;
  for (size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  std::set<int> s(cyc.begin(), cyc.end());
  return s.size() == cyc.size();
}

}  // namespace

TEST_CASE("girth on named graphs") {
  Graph p = petersen();
  Girth gp = girth(p);
  CHECK(gp.finite);
  CHECK(gp.value == 5);
  CHECK(gp.witness.size() == 5);
  CHECK(is_cycle_in(p, gp.witness));
  CHECK(gp.at_least(5));
  CHECK_FALSE(gp.at_least(6));

  Graph k4 = Graph::from_edges(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  Girth g4 = girth(k4);
  CHECK(g4.value == 3);
  CHECK(is_cycle_in(k4, g4.witness));

  Graph tree = Graph::from_edges(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
  Girth gt = girth(tree);
  CHECK_FALSE(gt.finite);
  CHECK(gt.at_least(1000));

  Graph empty;
  CHECK_FALSE(girth(empty).finite);
}

TEST_CASE("girth witness length matches value on random graphs") {
  for (uint64_t s = 0; s < 40; ++s) {
    Graph g = oracles::random_graph(9, 100 + s, 1, 3);
    Girth gi = girth(g);
    if (!gi.finite) {
      CHECK(oracles::brute_cycle_count(g, 9) == 0);
      continue;
    }
    CHECK(int(gi.witness.size()) == gi.value);
    CHECK(is_cycle_in(g, gi.witness));
    // No shorter cycle exists.
    CHECK(oracles::brute_cycle_count(g, gi.value - 1) == 0);
    CHECK(oracles::brute_cycle_count(g, gi.value) > 0);
  }
}

TEST_CASE("short cycle counts match brute force") {
  Graph k4 = Graph::from_edges(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  // 4 triangles + 3 quadrilaterals.
  CycleEnumeration ce = count_short_cycles(k4, 6);
  CHECK_FALSE(ce.cap_exceeded);
  CHECK(ce.count == 7);
  CHECK(ce.witnesses.size() == 7);
  for (const auto& w : ce.witnesses) CHECK(is_cycle_in(k4, w));

  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = oracles::random_graph(8, 200 + s, 2, 5);
    for (int r = 4; r <= 8; ++r) {
      CycleEnumeration e = count_short_cycles(g, r);
      REQUIRE_FALSE(e.cap_exceeded);
      CHECK(e.count == oracles::brute_cycle_count(g, r - 1));
      CHECK((e.count == 0) == girth(g).at_least(r));
    }
  }
}

TEST_CASE("cycle cap sets the marker without throwing") {
  // K9 has far more than 10 short cycles.
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= 9; ++u)
    for (int v = u + 1; v <= 9; ++v) e.emplace_back(u, v);
  Graph k9 = Graph::from_edges(9, e);
  CycleEnumeration ce = count_short_cycles(k9, 9, 10);
  CHECK(ce.cap_exceeded);
  CHECK(ce.count >= 10);
}
