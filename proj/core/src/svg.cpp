#include <algorithm>
#include <ostream>

#include "girthforge/curves.hpp"

namespace girthforge {

namespace {

// Fixed palette cycled by curve index.
const char* kColors[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                         "#b7950b", "#148f77", "#d35400", "#2c3e50"};

}  // namespace

void export_svg(std::ostream& out, const CurveFamily& f) {
  f.validate();
  // Bounding box in flipped (screen) coordinates, always including the
  // ground axis segment.
  long long xmin = 0, xmax = 10, ymin = -10, ymax = 10;
  for (const Curve& c : f.curves)
    for (const Point& p : c.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, -p.y);
      ymax = std::max(ymax, -p.y);
    }
  long long mx = std::max<long long>(1, (xmax - xmin) / 20);
  long long my = std::max<long long>(1, (ymax - ymin) / 20);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << (xmin - mx) << " " << (ymin - my) << " " << (xmax - xmin + 2 * mx)
      << " " << (ymax - ymin + 2 * my) << "\">\n";
  out << "  <line x1=\"0\" y1=\"" << (ymin - my) << "\" x2=\"0\" y2=\""
      << (ymax + my) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  long long stroke = std::max<long long>(1, (xmax - xmin) / 400);
  int idx = 0;
  for (const Curve& c : f.curves) {
    out << "  <polyline fill=\"none\" stroke=\""
        << kColors[idx % (sizeof(kColors) / sizeof(kColors[0]))]
        << "\" stroke-width=\"" << stroke << "\" points=\"";
    for (size_t i = 0; i < c.points.size(); ++i) {
      if (i) out << " ";
      out << c.points[i].x << "," << -c.points[i].y;
    }
    out << "\"/>\n";
    out << "  <text x=\"" << (xmin - mx) << "\" y=\"" << -c.points[0].y
        << "\" font-size=\"" << std::max<long long>(8, my) << "\">" << c.id
        << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
}

}  // namespace girthforge
