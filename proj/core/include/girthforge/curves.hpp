#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "girthforge/graph.hpp"
#include "girthforge/poset.hpp"

namespace girthforge {

struct Point {
  long long x = 0;
  long long y = 0;
  bool operator==(const Point&) const = default;
};

/// A grounded polyline: first point on the y-axis, everything else
/// strictly in the open right half-plane, integer coordinates.
struct Curve {
  int id = 0;
  std::vector<Point> points;
};

struct CurveFamily {
  std::vector<Curve> curves;

  // Groundedness, distinct ground heights, nondegenerate segments,
  // coordinates within +-2^31 (keeps every predicate exact in 128-bit).
  void validate() const;
};

/// Exact segment intersection, integer arithmetic only.  Touching
/// endpoints and collinear overlaps count as intersection.
bool segments_intersect(Point a, Point b, Point c, Point d);

// Unordered id pairs of curves sharing at least one point.
std::vector<std::pair<int, int>> pairwise_intersections(const CurveFamily& f);

// Complement of the intersection relation; curve ids must be 1..n.
Graph disjointness_graph(const CurveFamily& f);

/// Realizes a height-<=2 poset as a grounded curve family whose
/// disjointness graph equals the cover graph, label for label.
/// Minimals become nested L-hooks (any two hooks cross); each maximal
/// runs a top rail above all hooks, descends in a private lane right
/// of everything, returns along a private depth, and climbs a corridor
/// next to the axis from which it pokes exactly the hooks of the
/// minimals it does NOT cover.  All clearances are integral multiples
/// of a per-family grid pitch, so no two curves ever touch or overlap
/// collinearly unless they properly cross.
/// The output is checked with verify_realization before returning.
CurveFamily realize_height2(const Poset& p);

struct RealizationCheck {
  bool ok = true;
  // Symmetric difference: disjoint-but-not-cover / cover-but-not-disjoint.
  std::vector<std::pair<int, int>> extra_disjoint;
  std::vector<std::pair<int, int>> missing_disjoint;
};

RealizationCheck verify_realization(const CurveFamily& f, const CoverDag& cd);

// Curve file: `curves <count>`, then per curve `curve <id> <npoints>`
// followed by `<x> <y>` lines.
CurveFamily parse_curves(std::istream& in);
CurveFamily parse_curves_file(const std::string& path);
void write_curves(std::ostream& out, const CurveFamily& f,
                  const std::vector<std::string>& header_comments = {});

// SVG 1.1, y-axis flipped to screen convention, deterministic bytes.
void export_svg(std::ostream& out, const CurveFamily& f);

}  // namespace girthforge
