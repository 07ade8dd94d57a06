#include "lamanenum/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace laman {

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
};

Box bounding_box(const PointSet& ps) {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const Point& p : ps.points()) {
    const double x = p.x.get_d();
    const double y = p.y.get_d();
    b.xmin = std::min(b.xmin, x);
    b.xmax = std::max(b.xmax, x);
    b.ymin = std::min(b.ymin, y);
    b.ymax = std::max(b.ymax, y);
  }
  return b;
}

}  // namespace

void write_framework_svg(std::ostream& out, const EdgeUniverse& u,
                         const std::vector<int>& framework_ids,
                         const std::vector<char>& constraint_mask,
                         const Triangulation& underlying) {
  const PointSet& ps = u.points();
  const Box b = bounding_box(ps);
  const double w = std::max(b.xmax - b.xmin, 1e-9);
  const double h = std::max(b.ymax - b.ymin, 1e-9);
  const double margin = 0.05 * std::max(w, h);
  const double scale = 640.0 / std::max(w, h);
  const double width = (w + 2 * margin) * scale;
  const double height = (h + 2 * margin) * scale;
  auto sx = [&](const Point& p) { return (p.x.get_d() - b.xmin + margin) * scale; };
  // SVG y axis points down.
  auto sy = [&](const Point& p) { return height - (p.y.get_d() - b.ymin + margin) * scale; };

  std::vector<char> in_fw(static_cast<size_t>(u.edge_count()), 0);
  for (int e : framework_ids) in_fw[static_cast<size_t>(e)] = 1;

  char buf[256];
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" "
                "viewBox=\"0 0 %.1f %.1f\">\n",
                width, height, width, height);
  out << buf;

  auto line = [&](int eid, const char* style) {
    const Edge e = u.edge(eid);
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" %s/>\n", sx(ps[e.u]),
                  sy(ps[e.u]), sx(ps[e.v]), sy(ps[e.v]), style);
    out << buf;
  };
  // Dotted fill edges of the underlying triangulation first, framework on top.
  for (int e = 0; e < u.edge_count(); ++e)
    if (underlying.has_edge(e) && !in_fw[static_cast<size_t>(e)])
      line(e, "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  for (int e : framework_ids)
    if (!constraint_mask[static_cast<size_t>(e)]) line(e, "stroke=\"#000000\" stroke-width=\"1.8\"");
  for (int e : framework_ids)
    if (constraint_mask[static_cast<size_t>(e)]) line(e, "stroke=\"#000000\" stroke-width=\"3.6\"");

  for (const Point& p : ps.points()) {
    std::snprintf(buf, sizeof buf, "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3.5\" fill=\"#cc3333\"/>\n",
                  sx(p), sy(p));
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" fill=\"#333333\">%d</text>\n",
                  sx(p) + 5.0, sy(p) - 5.0, p.id);
    out << buf;
  }
  out << "</svg>\n";
}

}  // namespace laman
