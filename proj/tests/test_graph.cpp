#include <doctest.h>

#include <sstream>

#include "girthforge/graph.hpp"
#include "oracles.hpp"

using namespace girthforge;

TEST_CASE("from_edges validates and normalizes") {
  Graph g = Graph::from_edges(4, {{3, 1}, {1, 2}, {2, 4}});
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(3, 4));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbor_bits(1).to_vector() == std::vector<int>{2, 3});

  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ConfigError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), ConfigError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 2}}), ConfigError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), ConfigError);
}

TEST_CASE("induced subgraph relabels in order") {
  Graph g = Graph::from_edges(5, {{1, 2}, {2, 4}, {4, 5}, {1, 5}});
  Graph h = g.induced({1, 4, 5});
  CHECK(h.n() == 3);
  // 1->1, 4->2, 5->3
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("graph io round trip") {
  for (uint64_t s = 0; s < 10; ++s) {
    Graph g = oracles::random_graph(7, s);
    std::ostringstream out;
    write_graph(out, g, {"roundtrip check"});
    std::istringstream in(out.str());
    CHECK(parse_graph(in) == g);
  }
}

TEST_CASE("graph parse errors carry line numbers") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
  };
  CHECK_THROWS_AS(bad(""), ParseError);
  CHECK_THROWS_AS(bad("poset 3\n"), ParseError);
  CHECK_THROWS_AS(bad("graph 3\nedge 1 2\n"), ParseError);
  CHECK_THROWS_AS(bad("graph 3\ne 1\n"), ParseError);
  CHECK_THROWS_AS(bad("graph 3\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(bad("graph x\n"), ParseError);
  try {
    bad("graph 3\n# fine\ne 1 2\ne 2 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in("# header\n\ngraph 3 # trailing\ne 1 2\n\ne 2 3\n");
  Graph g = parse_graph(in);
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
}
