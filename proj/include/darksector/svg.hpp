#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "darksector/dark_sector.hpp"
#include "darksector/scene.hpp"

namespace darksector {

struct TracePolyline {
  std::vector<Vec2> points;
  std::size_t color = 0;  // component index
};

struct SvgOverlays {
  std::vector<TracePolyline> traces;
  std::vector<DarkSector> sectors;
};

/// SVG 1.1 drawing of the scene with K, traces and shaded sectors. The
/// viewport is the bounding square of K scaled 3x about its center;
/// sectors are clipped to it and the clipped edge is dashed.
std::string render_svg(const Scene& scene, const EnclosingCircle& circle, const SvgOverlays& overlays = {});

}  // namespace darksector
