#include "darksector/tracer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace darksector {

char lip_symbol(Lip lip) { return lip == Lip::Plus ? '+' : '-'; }

const char* status_name(TraceStatus status) {
  switch (status) {
    case TraceStatus::Escaped: return "escaped";
    case TraceStatus::BounceCapExceeded: return "bounce-cap-exceeded";
    case TraceStatus::Singular: return "singular";
  }
  return "unknown";
}

namespace {

struct Candidate {
  double t = std::numeric_limits<double>::infinity();
  std::size_t mirror = 0;  // 0-based
  bool singular = false;
};

// Distance from p to the ray origin + r*u, r >= 0, and the ray parameter of
// the closest point.
std::pair<double, double> point_ray_distance(Vec2 p, Vec2 origin, Vec2 u) {
  Vec2 w = p - origin;
  double along = dot(w, u);
  if (along <= 0.0) return {norm(w), 0.0};
  return {std::abs(cross(u, w)), along};
}

}  // namespace

FirstHit first_hit(Vec2 origin, double theta, const Scene& scene,
                   std::optional<std::size_t> exclude) {
  const Vec2 u = unit(theta);
  Candidate best;

  for (std::size_t j = 0; j < scene.mirrors.size(); ++j) {
    if (exclude && *exclude == j + 1) continue;
    const Mirror& m = scene.mirrors[j];
    const Vec2 dir = m.direction();
    const Vec2 a = m.anchor;
    const Vec2 w = a - origin;
    const double sin_angle = cross(u, dir);

    if (std::abs(sin_angle) < kSingularRadius) {
      // Grazing: any contact with the segment is singular.
      auto [da, ta] = point_ray_distance(a, origin, u);
      auto [db, tb] = point_ray_distance(a + dir * m.length, origin, u);
      double d = std::min(da, db);
      double t = da <= db ? ta : tb;
      if (d < kSingularRadius && t > kMinAdvance && t < best.t) best = {t, j, true};
      continue;
    }

    const double t = cross(w, dir) / sin_angle;
    if (!(t > kMinAdvance) || !(t < best.t)) continue;
    const double along = cross(w, u) / sin_angle;  // distance from anchor along the mirror
    const double to_end = m.length - along;
    if (along < -kSingularRadius || to_end < -kSingularRadius) continue;
    bool near_tip = std::abs(along) < kSingularRadius || std::abs(to_end) < kSingularRadius;
    best = {t, j, near_tip};
  }

  if (!std::isfinite(best.t)) return Escape{};
  const Vec2 point = origin + u * best.t;
  if (best.singular) return Singular{best.mirror + 1, point, best.t};
  const Mirror& m = scene.mirrors[best.mirror];
  Lip side = dot(u, m.left_normal()) < 0.0 ? Lip::Plus : Lip::Minus;
  return Hit{best.mirror + 1, side, point, best.t};
}

double reflect(double theta, const Mirror& m) { return wrap_two_pi(2.0 * m.angle.radians() - theta); }

GroupElement reflect_exact(const GroupElement& g, const Mirror& m) {
  return compose(mirror_reflection_element(m.angle), g);
}

Tracer::Tracer(Scene scene, std::size_t group_order_cap)
    : scene_(std::move(scene)),
      group_(ReflectionGroup::generate(mirror_angles(scene_), group_order_cap)) {
  generator_of_mirror_.reserve(scene_.mirrors.size());
  for (const auto& m : scene_.mirrors) generator_of_mirror_.push_back(group_.generator_index(m.angle));
}

TraceResult Tracer::trace(double theta0, const TraceOptions& options) const {
  return trace_from(scene_.source, theta0, options);
}

TraceResult Tracer::trace_from(Vec2 origin, double theta0, const TraceOptions& options) const {
  TraceResult result;
  Vec2 pos = origin;
  double theta = wrap_two_pi(theta0);
  std::size_t element = 0;  // identity
  std::optional<std::size_t> last;
  if (options.record_path) result.path.push_back(pos);

  for (;;) {
    FirstHit next = first_hit(pos, theta, scene_, last);
    if (std::holds_alternative<Escape>(next)) {
      result.status = TraceStatus::Escaped;
      break;
    }
    if (std::holds_alternative<Singular>(next)) {
      result.status = TraceStatus::Singular;
      break;
    }
    if (result.bounce_count == options.cap) {
      result.status = TraceStatus::BounceCapExceeded;
      break;
    }
    const Hit& hit = std::get<Hit>(next);
    const std::size_t k = hit.mirror_index - 1;
    result.itinerary.push_back({static_cast<std::uint32_t>(hit.mirror_index), hit.side});
    if (options.record_path) result.path.push_back(hit.point);
    pos = hit.point;
    theta = reflect(theta, scene_.mirrors[k]);
    element = group_.left_multiply(generator_of_mirror_[k], element);
    ++result.bounce_count;
    last = hit.mirror_index;
  }

  result.exit_point = pos;
  result.exit_dir_numeric = theta;
  result.exit_dir_index = element;
  result.exit_dir_exact = group_.elements()[element];
  if (result.status == TraceStatus::BounceCapExceeded && !options.keep_trapped_itinerary)
    result.itinerary.clear();
  return result;
}

TraceResult trace(const Scene& scene, double theta0, std::size_t cap) {
  TraceOptions options;
  options.cap = cap;
  return Tracer(scene).trace(theta0, options);
}

std::pair<Vec2, double> exit_ray(const TraceResult& tr, const EnclosingCircle& circle) {
  if (tr.status != TraceStatus::Escaped)
    throw std::logic_error(std::string("exit_ray on a trace with status ") + status_name(tr.status));
  const Vec2 u = unit(tr.exit_dir_numeric);
  const Vec2 w = tr.exit_point - circle.center;
  const double b = dot(w, u);
  const double c = dot(w, w) - circle.radius * circle.radius;
  const double t = -b + std::sqrt(std::max(0.0, b * b - c));
  return {tr.exit_point + u * t, tr.exit_dir_numeric};
}

}  // namespace darksector
