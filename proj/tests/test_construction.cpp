#include <doctest.h>

#include <sstream>

#include "girthforge/construction.hpp"
#include "girthforge/girth.hpp"
#include "girthforge/monotone.hpp"
#include "oracles.hpp"

using namespace girthforge;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ConstructionParams::desk_scale(1, 8, 5, 1, 0), ConfigError);
  CHECK_THROWS_AS(ConstructionParams::desk_scale(4, 1, 5, 1, 0), ConfigError);
  CHECK_THROWS_AS(ConstructionParams::desk_scale(4, 8, 3, 1, 0), ConfigError);
  CHECK_THROWS_AS(ConstructionParams::desk_scale(4, 8, 5, 0, 0), ConfigError);

  auto p = ConstructionParams::desk_scale(4, 16, 5, 1, 0);
  CHECK(p.total_vertices() == 64);
  CHECK(p.edge_probability(1, 2) == Rational(2, 16));
  CHECK(p.edge_probability(1, 4) == Rational(8, 16));
  CHECK_THROWS_AS(p.edge_probability(2, 2), ConfigError);

  // Asymptotic-mode instances are astronomically large by construction.
  CHECK_THROWS_AS(ConstructionParams::asymptotic(4, pow2(30), 0), ConfigError);
  // n = 2^{10r} yields k = 1: still rejected as a config error.
  CHECK_THROWS_AS(ConstructionParams::asymptotic(4, pow2(40), 0), ConfigError);
  // The first n with k >= 2 is far beyond what fits in memory.
  CHECK_THROWS_AS(ConstructionParams::asymptotic(4, pow2(80), 0),
                  InstanceTooLarge);
}

TEST_CASE("sampler determinism and layer structure") {
  auto p = ConstructionParams::desk_scale(4, 16, 5, 1, 42);
  LayeredGraph a = sample_layered_graph(p);
  LayeredGraph b = sample_layered_graph(p);
  CHECK(a.graph == b.graph);
  p.seed = 43;
  LayeredGraph c = sample_layered_graph(p);
  CHECK_FALSE(a.graph == c.graph);

  CHECK(a.graph.n() == 64);
  CHECK(a.layers == 4);
  CHECK(a.layer_of(1) == 1);
  CHECK(a.layer_of(16) == 1);
  CHECK(a.layer_of(17) == 2);
  CHECK(a.layer_of(64) == 4);
  for (auto [u, v] : a.graph.edges()) CHECK(a.layer_of(u) != a.layer_of(v));
  a.validate();
}

TEST_CASE("sampled edge count tracks its expectation") {
  // k=4, m=16, c=1: E[edges] = 256*(3*2/16 + 2*4/16 + 8/16) = 352,
  // Var = 244, so the mean of 150 samples has sd ~ 1.3.
  double total = 0;
  const int samples = 150;
  for (int s = 0; s < samples; ++s) {
    auto p = ConstructionParams::desk_scale(4, 16, 5, 1, 5000 + s);
    total += sample_layered_graph(p).graph.edge_count();
  }
  double mean = total / samples;
  CHECK(mean > 352 - 5);
  CHECK(mean < 352 + 5);
}

TEST_CASE("probability cap kicks in for wide gaps") {
  // m=4: p(1,4) = min(1, 8/4) = 1, so layer 1 x layer 4 is complete.
  auto p = ConstructionParams::desk_scale(4, 4, 5, 1, 9);
  LayeredGraph lg = sample_layered_graph(p);
  for (int u = 1; u <= 4; ++u)
    for (int v = 13; v <= 16; ++v) CHECK(lg.graph.has_edge(u, v));
}

TEST_CASE("event A exact check") {
  auto mk = [](int k, long long m, std::vector<std::pair<int, int>> e) {
    return LayeredGraph{Graph::from_edges(int(k * m), std::move(e)), k, m};
  };
  // Edgeless, two layers: |X||Y| <= m^2 = 16 < 3 m^2 / 2 = 24.
  CHECK(event_A_check(mk(2, 4, {})) == Tri::True);
  // Edgeless, gap 2: threshold 3 m^2 / 4 = 12 < 16, violated.
  CHECK(event_A_check(mk(3, 4, {})) == Tri::False);
  // Above the exhaustive cap: unchecked.
  CHECK(event_A_check(LayeredGraph{
            Graph::from_edges(34, {}), 2, 17}) == Tri::Unchecked);
  // Completing the far layer pair removes the only violating holes:
  // gap-1 holes max out at m^2 = 16 < 3 m^2 / 2 = 24.
  std::vector<std::pair<int, int>> far;
  for (int u = 1; u <= 4; ++u)
    for (int v = 9; v <= 12; ++v) far.emplace_back(u, v);
  CHECK(event_A_check(mk(3, 4, far)) == Tri::True);
  // Dropping one far edge only opens a 1x1 hole, well under the gap-2
  // threshold of 12.
  far.pop_back();
  CHECK(event_A_check(mk(3, 4, far)) == Tri::True);
}

TEST_CASE("repair yields certified graphs across configurations") {
  struct Cfg {
    int k;
    long long m;
    int r;
  };
  for (Cfg cfg : {Cfg{4, 24, 5}, Cfg{5, 20, 6}, Cfg{6, 16, 7}}) {
    for (uint64_t s = 0; s < 3; ++s) {
      auto p = ConstructionParams::desk_scale(cfg.k, cfg.m, cfg.r, 1, s);
      LayeredGraph lg = sample_layered_graph(p);
      auto [gp, rep] = repair(lg, cfg.r);
      CHECK(girth(gp).at_least(cfg.r));
      CHECK(list_bad_pairs(gp).empty());
      CHECK(gp.n() == rep.survived_n);
      CHECK(int(rep.deleted.size()) + rep.survived_n == lg.graph.n());
      // old_label is strictly increasing and disjoint from deleted.
      CHECK(int(rep.old_label.size()) == rep.survived_n);
      std::set<int> dead(rep.deleted.begin(), rep.deleted.end());
      for (int i = 0; i < rep.survived_n; ++i) {
        if (i > 0) CHECK(rep.old_label[i - 1] < rep.old_label[i]);
        CHECK_FALSE(dead.count(rep.old_label[i]));
      }
      // Surviving edges are exactly the induced ones.
      CHECK(gp == lg.graph.induced(rep.old_label));

      VerificationReport ver = verify_construction(gp, cfg.r, p, rep.event_A);
      CHECK(ver.all_pass);
      CHECK(ver.find("girth")->pass);
      CHECK(ver.find("bad_pairs")->pass);
      CHECK(ver.find("covers_equal_edges")->pass);
      CHECK(ver.find("uniquely_generated")->pass);
    }
  }
}

TEST_CASE("repair honors target_n or reports insufficiency") {
  auto p = ConstructionParams::desk_scale(4, 16, 5, 1, 3);
  LayeredGraph lg = sample_layered_graph(p);
  auto [gp, rep] = repair(lg, 5, 10);
  CHECK(gp.n() == 10);
  CHECK(girth(gp).at_least(5));
  CHECK(list_bad_pairs(gp).empty());
  CHECK_THROWS_AS(repair(lg, 5, 1000), InsufficientSurvivors);
}

TEST_CASE("verification flags a violated girth clause") {
  Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto p = ConstructionParams::desk_scale(2, 2, 5, 1, 0);
  VerificationReport ver = verify_construction(c4, 5, p);
  CHECK_FALSE(ver.all_pass);
  CHECK_FALSE(ver.find("girth")->pass);
  CHECK_FALSE(ver.find("girth")->witness.empty());
}

TEST_CASE("build_poset requires bad-pair freedom") {
  Graph tri = Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_THROWS_AS(build_poset(tri), BadPairsPresent);

  Graph path = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  Poset p = build_poset(path);
  CHECK(p.less(1, 4));
  CHECK(covers_from_order(p).edges == path.edges());
}

TEST_CASE("constant chain holds for the full range") {
  for (int r = 4; r <= 64; ++r) {
    ConstantChain c = constant_chain(r);
    CHECK(c.holds);
    CHECK(c.series_ok);
    CHECK(c.rhs == Rational(1, 100));
    CHECK(c.lhs_lower > c.rhs);
  }
  CHECK_THROWS_AS(constant_chain(3), ConfigError);
  CHECK_THROWS_AS(constant_chain(65), ConfigError);
}

TEST_CASE("truncated series matches its closed form") {
  for (int K = 1; K <= 64; ++K) {
    Rational expect = 2 - Rational(K + 2, 1) / pow2(unsigned(K));
    CHECK(monotone_series_partial(K) == expect);
    CHECK(monotone_series_partial(K) < 2);
  }
}

TEST_CASE("layered io round trip and strictness") {
  auto p = ConstructionParams::desk_scale(3, 8, 5, 1, 11);
  LayeredGraph lg = sample_layered_graph(p);
  std::ostringstream out;
  write_layered_graph(out, lg, {"roundtrip"});
  std::istringstream in(out.str());
  LayeredGraph back = parse_layered_graph(in);
  CHECK(back.graph == lg.graph);
  CHECK(back.layers == lg.layers);
  CHECK(back.layer_size == lg.layer_size);

  auto bad = [](const std::string& text) {
    std::istringstream in2(text);
    return parse_layered_graph(in2);
  };
  CHECK_THROWS_AS(bad("graph 4\ne 1 2\n"), ParseError);       // no layers line
  CHECK_THROWS_AS(bad("graph 4\nlayers 2 2\ne 1 2\n"), ParseError);  // intra-layer
  CHECK_THROWS_AS(bad("graph 4\nlayers 3 2\n"), ParseError);  // bad partition
}
