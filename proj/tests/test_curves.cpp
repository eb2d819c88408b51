#include <doctest.h>

#include <sstream>

#include "girthforge/curves.hpp"
#include "oracles.hpp"

using namespace girthforge;

namespace {

Poset random_height2(int s, int q, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= q; ++j)
      if (rng.bernoulli(1, 2)) covers.emplace_back(i, s + j);
  return Poset::from_covers(s + q, covers);
}

}  // namespace

TEST_CASE("segment intersection agrees with the rational oracle") {
  // Hand-picked cases: proper crossing, endpoint touch, collinear
  // overlap, collinear gap, parallel, T-junction.
  auto isect = [](long long ax, long long ay, long long bx, long long by,
                  long long cx, long long cy, long long dx, long long dy) {
    Point a{ax, ay}, b{bx, by}, c{cx, cy}, d{dx, dy};
    bool got = segments_intersect(a, b, c, d);
    CHECK(got == segments_intersect(c, d, a, b));
    CHECK(got == segments_intersect(b, a, c, d));
    CHECK(got == oracles::rational_segments_intersect(a, b, c, d));
    return got;
  };
  CHECK(isect(0, 0, 4, 4, 0, 4, 4, 0));       // X crossing
  CHECK(isect(0, 0, 4, 0, 4, 0, 4, 4));       // endpoint touch
  CHECK(isect(0, 0, 4, 0, 2, 0, 6, 0));       // collinear overlap
  CHECK_FALSE(isect(0, 0, 1, 0, 2, 0, 3, 0)); // collinear gap
  CHECK_FALSE(isect(0, 0, 4, 0, 0, 1, 4, 1)); // parallel
  CHECK(isect(0, 0, 4, 0, 2, -1, 2, 3));      // vertical through
  CHECK(isect(0, 0, 4, 0, 2, 0, 2, 3));       // T junction
  CHECK_FALSE(isect(0, 0, 4, 0, 2, 1, 2, 3)); // near miss

  Rng rng(2024);
  for (int t = 0; t < 3000; ++t) {
    auto coord = [&] { return (long long)rng.below(9) - 4; };
    Point a{coord(), coord()}, b{coord(), coord()};
    Point c{coord(), coord()}, d{coord(), coord()};
    if ((a == b) || (c == d)) continue;
    CHECK(segments_intersect(a, b, c, d) ==
          oracles::rational_segments_intersect(a, b, c, d));
  }
}

TEST_CASE("intersection predicate survives extreme coordinates") {
  const long long M = (1LL << 31) - 1;
  // Two long near-parallel diagonals that a double-precision cross
  // product cannot separate.
  CHECK_FALSE(segments_intersect({-M, -M}, {M, M - 1}, {-M, -M + 1}, {M, M}));
  CHECK(segments_intersect({-M, -M}, {M, M}, {-M, M}, {M, -M}));
}

TEST_CASE("family validation") {
  auto fam = [](std::vector<Curve> cs) {
    CurveFamily f{std::move(cs)};
    f.validate();
    return f;
  };
  CHECK_NOTHROW(fam({{1, {{0, 0}, {3, 1}}}, {2, {{0, 5}, {4, 2}}}}));
  // Not grounded.
  CHECK_THROWS_AS(fam({{1, {{1, 0}, {3, 1}}}}), ConfigError);
  // Returns to the axis after the first point.
  CHECK_THROWS_AS(fam({{1, {{0, 0}, {3, 1}, {0, 2}}}}), ConfigError);
  // Duplicate ground heights.
  CHECK_THROWS_AS(fam({{1, {{0, 0}, {3, 1}}}, {2, {{0, 0}, {4, 2}}}}),
                  ConfigError);
  // Duplicate ids.
  CHECK_THROWS_AS(fam({{1, {{0, 0}, {3, 1}}}, {1, {{0, 5}, {4, 2}}}}),
                  ConfigError);
  // Zero-length segment.
  CHECK_THROWS_AS(fam({{1, {{0, 0}, {3, 1}, {3, 1}}}}), ConfigError);
  // Coordinate overflow.
  CHECK_THROWS_AS(fam({{1, {{0, 0}, {1LL << 31, 1}}}}), ConfigError);
}

TEST_CASE("disjointness graph on a hand-built family") {
  // 1 and 2 cross; 3 stays clear of both.
  CurveFamily f{{{1, {{0, 0}, {10, 0}}},
                 {2, {{0, -5}, {5, 5}}},
                 {3, {{0, 20}, {10, 20}}}}};
  auto hits = pairwise_intersections(f);
  CHECK(hits == std::vector<std::pair<int, int>>{{1, 2}});
  Graph d = disjointness_graph(f);
  CHECK(d.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("realization on hand-picked posets") {
  // Empty and antichain posets realize trivially.
  CHECK(realize_height2(Poset::from_covers(0, {})).curves.empty());
  CHECK(verify_realization(realize_height2(Poset::from_covers(3, {})),
                           covers_from_order(Poset::from_covers(3, {})))
            .ok);
  // A chain of three cannot be height 2.
  CHECK_THROWS_AS(realize_height2(Poset::from_covers(3, {{1, 2}, {2, 3}})),
                  ChainOfThree);
}

TEST_CASE("realization matches the cover graph on random height-2 posets") {
  for (uint64_t s = 0; s < 60; ++s) {
    int sz = 1 + int(s % 5), q = 1 + int(s % 4);
    Poset p = random_height2(sz, q, 3000 + s);
    CurveFamily f = realize_height2(p);
    CHECK(int(f.curves.size()) == p.n());
    RealizationCheck chk = verify_realization(f, covers_from_order(p));
    REQUIRE(chk.ok);

    // Independent cross-check with the rational intersection oracle.
    std::set<std::pair<int, int>> covers;
    for (auto [x, y] : covers_from_order(p).edges) covers.insert({x, y});
    for (size_t i = 0; i < f.curves.size(); ++i)
      for (size_t j = i + 1; j < f.curves.size(); ++j) {
        bool crossing =
            oracles::rational_curves_intersect(f.curves[i], f.curves[j]);
        int a = f.curves[i].id, b = f.curves[j].id;
        if (a > b) std::swap(a, b);
        CHECK(crossing == !covers.count({a, b}));
      }
  }
}

TEST_CASE("curve io round trip") {
  Poset p = random_height2(3, 3, 99);
  CurveFamily f = realize_height2(p);
  std::ostringstream out;
  write_curves(out, f, {"roundtrip"});
  std::istringstream in(out.str());
  CurveFamily back = parse_curves(in);
  REQUIRE(back.curves.size() == f.curves.size());
  for (size_t i = 0; i < f.curves.size(); ++i) {
    CHECK(back.curves[i].id == f.curves[i].id);
    CHECK(back.curves[i].points == f.curves[i].points);
  }
  auto bad = [](const std::string& text) {
    std::istringstream in2(text);
    return parse_curves(in2);
  };
  CHECK_THROWS_AS(bad("curves 1\ncurve 1 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(bad("graph 1\n"), ParseError);
  CHECK_THROWS_AS(bad("curves 1\ncurve 1 1\n0 x\n"), ParseError);
}

TEST_CASE("svg export is deterministic and well formed") {
  Poset p = random_height2(3, 2, 7);
  CurveFamily f = realize_height2(p);
  std::ostringstream a, b;
  export_svg(a, f);
  export_svg(b, f);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("<svg") != std::string::npos);
  CHECK(a.str().rfind("</svg>\n") == a.str().size() - 7);
  size_t polylines = 0, at = 0;
  while ((at = a.str().find("<polyline", at)) != std::string::npos) {
    ++polylines;
    ++at;
  }
  CHECK(polylines == f.curves.size());
}
