#include "svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

namespace inconic::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  double minx = scene.quad[0].x, maxx = minx, miny = scene.quad[0].y, maxy = miny;
  auto grow = [&](Point p) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  };
  for (const Point& p : scene.quad) grow(p);
  for (const EllipseGeo& e : scene.ellipses) {
    for (int i = 0; i < 64; ++i) grow(e.point_at(2.0 * std::numbers::pi * i / 64));
  }
  const double w = maxx - minx, h = maxy - miny;
  const double padx = 0.05 * w, pady = 0.05 * h;
  const double stroke = 0.004 * std::max(w, h);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
     << num(std::round(800.0 * (h + 2 * pady) / (w + 2 * padx))) << "\" viewBox=\""
     << num(minx - padx) << ' ' << num(-maxy - pady) << ' ' << num(w + 2 * padx) << ' '
     << num(h + 2 * pady) << "\">\n";
  // Flip so user units match the input coordinates with y pointing up.
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";

  os << "<path id=\"quad\" stroke=\"black\" d=\"M " << num(scene.quad[0].x) << ' '
     << num(scene.quad[0].y);
  for (int i = 1; i < 4; ++i) os << " L " << num(scene.quad[i].x) << ' ' << num(scene.quad[i].y);
  os << " Z\"/>\n";

  if (scene.chord) {
    const auto& [a, b] = *scene.chord;
    os << "<line id=\"chord\" stroke=\"gray\" stroke-dasharray=\"" << num(4 * stroke) << ' '
       << num(3 * stroke) << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
       << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  if (scene.locus) {
    const auto& [a, b] = *scene.locus;
    os << "<line id=\"locus\" stroke=\"blue\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y)
       << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  for (const EllipseGeo& e : scene.ellipses) {
    os << "<ellipse stroke=\"red\" cx=\"" << num(e.center.x) << "\" cy=\"" << num(e.center.y)
       << "\" rx=\"" << num(e.semi_major) << "\" ry=\"" << num(e.semi_minor)
       << "\" transform=\"rotate(" << num(e.angle * 180.0 / std::numbers::pi) << ' '
       << num(e.center.x) << ' ' << num(e.center.y) << ")\"/>\n";
  }
  for (const Point& p : scene.contacts) {
    os << "<circle fill=\"green\" stroke=\"none\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
       << "\" r=\"" << num(2 * stroke) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace inconic::cli
