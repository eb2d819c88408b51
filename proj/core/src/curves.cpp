#include "girthforge/curves.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "girthforge/lineio.hpp"

namespace girthforge {

namespace {

constexpr long long kCoordLimit = 1LL << 31;

using Wide = __int128;

int sign(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient(Point a, Point b, Point c) {
  Wide v = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
  return sign(v);
}

bool on_segment(Point a, Point b, Point p) {
  // Assumes p collinear with ab.
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct Bbox {
  long long xmin, xmax, ymin, ymax;
};

Bbox bbox_of(const Curve& c) {
  Bbox b{c.points[0].x, c.points[0].x, c.points[0].y, c.points[0].y};
  for (const Point& p : c.points) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

bool boxes_meet(const Bbox& a, const Bbox& b) {
  return a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax &&
         b.ymin <= a.ymax;
}

bool curves_intersect(const Curve& a, const Curve& b) {
  for (size_t i = 0; i + 1 < a.points.size(); ++i)
    for (size_t j = 0; j + 1 < b.points.size(); ++j)
      if (segments_intersect(a.points[i], a.points[i + 1], b.points[j],
                             b.points[j + 1]))
        return true;
  return false;
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
  int d1 = orient(c, d, a);
  int d2 = orient(c, d, b);
  int d3 = orient(a, b, c);
  int d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

void CurveFamily::validate() const {
  std::map<long long, int> ground_heights;
  std::map<int, int> ids;
  for (const Curve& c : curves) {
    if (++ids[c.id] > 1) throw ConfigError("duplicate curve id " + std::to_string(c.id));
    if (c.points.empty()) throw ConfigError("curve " + std::to_string(c.id) + " has no points");
    if (c.points[0].x != 0)
      throw ConfigError("curve " + std::to_string(c.id) + " is not grounded");
    for (size_t i = 0; i < c.points.size(); ++i) {
      const Point& p = c.points[i];
      if (i > 0 && p.x <= 0)
        throw ConfigError("curve " + std::to_string(c.id) +
                          " leaves the open right half-plane");
      if (std::llabs(p.x) >= kCoordLimit || std::llabs(p.y) >= kCoordLimit)
        throw ConfigError("coordinate out of range on curve " + std::to_string(c.id));
      if (i > 0 && p == c.points[i - 1])
        throw ConfigError("zero-length segment on curve " + std::to_string(c.id));
    }
    if (++ground_heights[c.points[0].y] > 1)
      throw ConfigError("two curves share the ground height " +
                        std::to_string(c.points[0].y));
  }
}

std::vector<std::pair<int, int>> pairwise_intersections(const CurveFamily& f) {
  f.validate();
  std::vector<Bbox> boxes;
  boxes.reserve(f.curves.size());
  for (const Curve& c : f.curves) boxes.push_back(bbox_of(c));

  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < f.curves.size(); ++i)
    for (size_t j = i + 1; j < f.curves.size(); ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      if (curves_intersect(f.curves[i], f.curves[j])) {
        int a = f.curves[i].id, b = f.curves[j].id;
        out.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Graph disjointness_graph(const CurveFamily& f) {
  int n = int(f.curves.size());
  for (const Curve& c : f.curves)
    if (c.id < 1 || c.id > n)
      throw ConfigError("curve ids must be 1..n for the disjointness graph");
  auto meets = pairwise_intersections(f);
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!std::binary_search(meets.begin(), meets.end(), std::make_pair(a, b)))
        edges.emplace_back(a, b);
  return Graph::from_edges(n, std::move(edges));
}

CurveFamily realize_height2(const Poset& p) {
  Height2 h = check_height2(p);
  int s = int(h.minimals.size());
  int q = int(h.maximals.size());
  long long G = 2 * (q + 2);  // grid pitch; all offsets below stay under G

  // hook_index[v] = 1-based position among the minimals, by label.
  std::vector<int> hook_index(p.n() + 1, 0);
  for (int i = 0; i < s; ++i) hook_index[h.minimals[i]] = i + 1;

  CurveFamily fam;
  fam.curves.reserve(p.n());

  long long B = G * (20LL * s + 10);  // right end of the hook bottom rails

  for (int i = 1; i <= s; ++i) {
    Curve c;
    c.id = h.minimals[i - 1];
    long long top = G * 10LL * i;
    long long elbow = G * (10LL * s + i);
    c.points = {{0, top}, {elbow, top}, {elbow, -top}, {B, -top}};
    fam.curves.push_back(std::move(c));
  }

  for (int mi = 1; mi <= q; ++mi) {
    int v = h.maximals[mi - 1];
    Curve c;
    c.id = v;
    long long top = G * (10LL * s + 10LL * (q - mi + 1));
    long long lane = B + G * 10LL * mi;
    long long depth = -G * (10LL * s + 10LL * mi);
    long long corridor = q - mi + 1;  // strictly inside 0 < x < G, left of everything
    c.points = {{0, top}, {lane, top}, {lane, depth}, {corridor, depth}};
    // Poke every minimal this maximal does not cover, deepest first.
    for (int i = s; i >= 1; --i) {
      int u = h.minimals[i - 1];
      if (p.less(u, v)) continue;
      long long y_out = -G * 10LL * i + 2 * mi;
      long long x_out = G * (10LL * s + i) + 2 * mi;
      c.points.push_back({corridor, y_out});
      c.points.push_back({x_out, y_out});
      c.points.push_back({x_out, y_out + 1});
      c.points.push_back({corridor, y_out + 1});
    }
    c.points.push_back({corridor, -G});
    fam.curves.push_back(std::move(c));
  }

  std::sort(fam.curves.begin(), fam.curves.end(),
            [](const Curve& a, const Curve& b) { return a.id < b.id; });
  fam.validate();

  auto check = verify_realization(fam, covers_from_order(p));
  if (!check.ok)
    throw std::logic_error("height-2 realization failed its own verification");
  return fam;
}

RealizationCheck verify_realization(const CurveFamily& f, const CoverDag& cd) {
  if (int(f.curves.size()) != cd.n)
    throw ConfigError("curve family and poset have different sizes");
  Graph dg = disjointness_graph(f);
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : cd.edges)
    covers.emplace_back(std::min(x, y), std::max(x, y));
  std::sort(covers.begin(), covers.end());

  RealizationCheck out;
  const auto& dis = dg.edges();
  std::set_difference(dis.begin(), dis.end(), covers.begin(), covers.end(),
                      std::back_inserter(out.extra_disjoint));
  std::set_difference(covers.begin(), covers.end(), dis.begin(), dis.end(),
                      std::back_inserter(out.missing_disjoint));
  out.ok = out.extra_disjoint.empty() && out.missing_disjoint.empty();
  return out;
}

CurveFamily parse_curves(std::istream& in) {
  detail::LineReader rd(in);
  std::vector<std::string> tok;
  if (!rd.next(tok)) throw ParseError(rd.lineno(), "empty curve file");
  if (tok[0] != "curves" || tok.size() != 2) rd.fail("expected 'curves <count>'");
  long long count = rd.to_int(tok[1]);
  if (count < 0 || count > 1'000'000) rd.fail("curve count out of range");
  CurveFamily fam;
  for (long long c = 0; c < count; ++c) {
    if (!rd.next(tok) || tok[0] != "curve" || tok.size() != 3)
      rd.fail("expected 'curve <id> <npoints>'");
    Curve cv;
    cv.id = int(rd.to_int(tok[1]));
    long long npts = rd.to_int(tok[2]);
    if (npts < 1 || npts > 10'000'000) rd.fail("point count out of range");
    for (long long i = 0; i < npts; ++i) {
      if (!rd.next(tok) || tok.size() != 2) rd.fail("expected '<x> <y>'");
      cv.points.push_back({rd.to_int(tok[0]), rd.to_int(tok[1])});
    }
    fam.curves.push_back(std::move(cv));
  }
  if (rd.next(tok)) rd.fail("trailing content after last curve");
  try {
    fam.validate();
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
  return fam;
}

CurveFamily parse_curves_file(const std::string& path) {
  auto f = detail::open_or_throw(path);
  try {
    return parse_curves(f);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_curves(std::ostream& out, const CurveFamily& f,
                  const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "curves " << f.curves.size() << "\n";
  for (const Curve& c : f.curves) {
    out << "curve " << c.id << " " << c.points.size() << "\n";
    for (const Point& p : c.points) out << p.x << " " << p.y << "\n";
  }
}

}  // namespace girthforge
