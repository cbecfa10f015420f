#include "darksector/geometry.hpp"

#include <algorithm>

#include "darksector/exact_angle.hpp"

namespace darksector {

double direction_of(Vec2 v) { return wrap_two_pi(std::atan2(v.y, v.x)); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

namespace {

int orientation_sign(Vec2 a, Vec2 b, Vec2 c) {
  double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  // Collinear and touching cases are caught by the endpoint distances.
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

}  // namespace darksector
