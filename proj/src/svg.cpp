#include "darksector/svg.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace darksector {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Box {
  double xmin, ymin, xmax, ymax;
};

// Scene y points up; SVG y points down.
std::string pt(Vec2 p) { return fmt::format("{:.6f},{:.6f}", p.x, -p.y); }

// Sutherland-Hodgman against one axis-aligned half-plane.
std::vector<Vec2> clip_half(const std::vector<Vec2>& poly, int axis, double bound, bool keep_below) {
  std::vector<Vec2> out;
  auto coord = [axis](Vec2 p) { return axis == 0 ? p.x : p.y; };
  auto inside = [&](Vec2 p) { return keep_below ? coord(p) <= bound : coord(p) >= bound; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 a = poly[i];
    Vec2 b = poly[(i + 1) % poly.size()];
    bool ia = inside(a), ib = inside(b);
    if (ia) out.push_back(a);
    if (ia != ib) {
      double t = (bound - coord(a)) / (coord(b) - coord(a));
      Vec2 q = a + (b - a) * t;
      if (axis == 0) q.x = bound; else q.y = bound;
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Vec2> clip(std::vector<Vec2> poly, const Box& box) {
  poly = clip_half(poly, 0, box.xmin, false);
  poly = clip_half(poly, 0, box.xmax, true);
  poly = clip_half(poly, 1, box.ymin, false);
  poly = clip_half(poly, 1, box.ymax, true);
  return poly;
}

bool on_same_side(Vec2 a, Vec2 b, const Box& box) {
  auto eq = [](double u, double v) { return u == v; };
  return (eq(a.x, box.xmin) && eq(b.x, box.xmin)) || (eq(a.x, box.xmax) && eq(b.x, box.xmax)) ||
         (eq(a.y, box.ymin) && eq(b.y, box.ymin)) || (eq(a.y, box.ymax) && eq(b.y, box.ymax));
}

}  // namespace

std::string render_svg(const Scene& scene, const EnclosingCircle& circle, const SvgOverlays& overlays) {
  const double half = 3.0 * circle.radius;
  const Box box{circle.center.x - half, circle.center.y - half, circle.center.x + half, circle.center.y + half};
  const double stroke = circle.radius / 150.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
      "viewBox=\"{:.6f} {:.6f} {:.6f} {:.6f}\">\n",
      box.xmin, -box.ymax, box.xmax - box.xmin, box.ymax - box.ymin);
  svg += fmt::format("<rect x=\"{:.6f}\" y=\"{:.6f}\" width=\"{:.6f}\" height=\"{:.6f}\" fill=\"white\"/>\n",
                     box.xmin, -box.ymax, box.xmax - box.xmin, box.ymax - box.ymin);

  for (const auto& s : overlays.sectors) {
    // A fan polygon whose chords stay beyond every viewport point.
    constexpr int kSteps = 8;
    const double step = s.angle() / kSteps;
    const double reach = (distance(s.apex, circle.center) + 2.0 * half) / std::cos(0.5 * step);
    std::vector<Vec2> wedge{s.apex};
    for (int i = 0; i <= kSteps; ++i) wedge.push_back(s.apex + unit(s.dir_lo + step * i) * reach);
    auto poly = clip(wedge, box);
    if (poly.size() < 3) continue;
    svg += "<polygon class=\"dark-sector\" fill=\"#444444\" fill-opacity=\"0.35\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) svg += (i ? " " : "") + pt(poly[i]);
    svg += "\"/>\n";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
      bool truncated = on_same_side(a, b, box);
      svg += fmt::format(
          "<path class=\"{}\" d=\"M {} L {}\" stroke=\"#222222\" stroke-width=\"{:.6f}\"{} fill=\"none\"/>\n",
          truncated ? "sector-truncation" : "sector-edge", pt(a), pt(b), stroke,
          truncated ? fmt::format(" stroke-dasharray=\"{:.6f} {:.6f}\"", 6 * stroke, 4 * stroke) : "");
    }
  }

  svg += fmt::format(
      "<circle class=\"enclosing-circle\" cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"none\" "
      "stroke=\"#888888\" stroke-width=\"{:.6f}\"/>\n",
      circle.center.x, -circle.center.y, circle.radius, stroke);

  for (const auto& t : overlays.traces) {
    if (t.points.size() < 2) continue;
    svg += fmt::format("<polyline class=\"trace\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.6f}\" points=\"",
                       kPalette[t.color % kPalette.size()], stroke);
    for (std::size_t i = 0; i < t.points.size(); ++i) svg += (i ? " " : "") + pt(t.points[i]);
    svg += "\"/>\n";
  }

  for (std::size_t k = 0; k < scene.mirrors.size(); ++k) {
    auto [a, b] = endpoints(scene.mirrors[k]);
    svg += fmt::format(
        "<path class=\"mirror\" id=\"mirror-{}\" d=\"M {} L {}\" stroke=\"black\" stroke-width=\"{:.6f}\" "
        "stroke-linecap=\"round\"/>\n",
        k + 1, pt(a), pt(b), 3 * stroke);
  }
  svg += fmt::format("<circle class=\"source\" cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"#e6b800\" "
                     "stroke=\"black\" stroke-width=\"{:.6f}\"/>\n",
                     scene.source.x, -scene.source.y, 4 * stroke, stroke / 2);
  svg += "</svg>\n";
  return svg;
}

}  // namespace darksector
