#pragma once

// Mirror configurations: two-sided segment mirrors at exact rational angles,
// a light source, validation, the enclosing circle, and the JSON scene file.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "darksector/exact_angle.hpp"
#include "darksector/geometry.hpp"

namespace darksector {

/// Minimum mirror-mirror and source-mirror clearance, in scene units.
inline constexpr double kMinClearance = 1e-9;
inline constexpr double kDefaultCircleMargin = 1.25;

/// cos(t*pi) and sin(t*pi), exact at multiples of 1/2.
Vec2 unit_pi(const RationalTurn& t);

struct Mirror {
  Vec2 anchor;
  double length = 0.0;
  RationalTurn angle;  // line direction, in units of pi

  Vec2 direction() const { return unit_pi(angle); }
  /// Unit normal pointing to the left of the segment direction.
  Vec2 left_normal() const {
    Vec2 d = direction();
    return {-d.y, d.x};
  }
  bool operator==(const Mirror&) const = default;
};

std::pair<Vec2, Vec2> endpoints(const Mirror& m);

struct Scene {
  std::vector<Mirror> mirrors;
  Vec2 source;

  bool operator==(const Scene&) const = default;
};

std::vector<RationalTurn> mirror_angles(const Scene& scene);

enum class ViolationCode { NoMirrors, NonPositiveLength, MirrorsIntersect, SourceOnMirror };

std::string_view code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::vector<std::size_t> mirrors;  // 1-based, document order
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationCode code) const;
};

ValidationReport validate_scene(const Scene& scene, double min_clearance = kMinClearance);

struct EnclosingCircle {
  Vec2 center;
  double radius = 1.0;

  bool strictly_contains(Vec2 p) const { return distance(p, center) < radius; }
  bool operator==(const EnclosingCircle&) const = default;
};

/// Circle centered on the bounding box of all endpoints and the source, with
/// radius margin * (largest distance from the center). A scene whose points
/// all coincide gets radius 1.
EnclosingCircle enclosing_circle(const Scene& scene, double margin = kDefaultCircleMargin);

class SceneParseError : public std::runtime_error {
 public:
  SceneParseError(std::string field, std::string detail, std::size_t line = 0);
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

/// Parses a scene document. Structure errors throw SceneParseError; geometric
/// problems are left to validate_scene.
Scene load_scene(std::string_view text);
Scene load_scene_file(const std::filesystem::path& path);
std::string save_scene(const Scene& scene);

}  // namespace darksector
