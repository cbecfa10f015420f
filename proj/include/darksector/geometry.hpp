#pragma once

#include <cmath>

namespace darksector {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double k, Vec2 v) { return v * k; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// Direction of v in [0, 2pi).
double direction_of(Vec2 v);

/// Closest distance from p to the segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
/// Closest distance between segments [a, b] and [c, d]; zero if they cross.
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

}  // namespace darksector
