#pragma once

// Billiard ray tracing among two-sided mirrors.
//
// Each trace carries its direction twice: numerically (updated per bounce by
// the reflection formula) and exactly, as the composition of the mirror
// reflections in hit order. The exact element is tracked as an index into the
// scene's reflection group through its Cayley table, so a bounce costs one
// table lookup.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "darksector/exact_angle.hpp"
#include "darksector/geometry.hpp"
#include "darksector/scene.hpp"

namespace darksector {

inline constexpr double kMinAdvance = 1e-9;    // epsilon_t
inline constexpr double kSingularRadius = 1e-9;  // epsilon_sing
inline constexpr std::size_t kDefaultBounceCap = 10000;

/// Which lip of a mirror a ray strikes. Plus is the lip facing the mirror's
/// left normal, so a ray dropping onto a horizontal mirror hits Plus.
enum class Lip : std::uint8_t { Plus, Minus };

char lip_symbol(Lip lip);

struct ItineraryStep {
  std::uint32_t mirror = 0;  // 1-based
  Lip side = Lip::Plus;
  bool operator==(const ItineraryStep&) const = default;
};

using Itinerary = std::vector<ItineraryStep>;

struct Hit {
  std::size_t mirror_index = 0;  // 1-based
  Lip side = Lip::Plus;
  Vec2 point;
  double t = 0.0;
};

struct Escape {};

/// The ray reaches a mirror endpoint, or runs along a mirror line.
struct Singular {
  std::size_t mirror_index = 0;  // 1-based
  Vec2 point;
  double t = 0.0;
};

using FirstHit = std::variant<Hit, Escape, Singular>;

/// Nearest mirror struck by the ray from origin in direction theta.
/// `exclude` (1-based) skips a mirror, normally the one just reflected from.
FirstHit first_hit(Vec2 origin, double theta, const Scene& scene,
                   std::optional<std::size_t> exclude = std::nullopt);

/// 2*angle*pi - theta, reduced to [0, 2pi).
double reflect(double theta, const Mirror& m);
GroupElement reflect_exact(const GroupElement& g, const Mirror& m);

enum class TraceStatus { Escaped, BounceCapExceeded, Singular };

const char* status_name(TraceStatus status);

struct TraceResult {
  TraceStatus status = TraceStatus::Escaped;
  Itinerary itinerary;
  std::vector<Vec2> path;  // start point then reflection points
  Vec2 exit_point;         // last reflection point, or the start point
  double exit_dir_numeric = 0.0;
  GroupElement exit_dir_exact;
  std::size_t exit_dir_index = 0;  // index of exit_dir_exact in the scene's group
  std::size_t bounce_count = 0;
};

struct TraceOptions {
  std::size_t cap = kDefaultBounceCap;
  bool record_path = true;
  /// Itineraries of capped traces are dropped when false.
  bool keep_trapped_itinerary = true;
};

/// Tracing context for one scene: owns the scene and its reflection group.
/// Immutable after construction; trace() may be called concurrently.
class Tracer {
 public:
  explicit Tracer(Scene scene, std::size_t group_order_cap = kDefaultGroupOrderCap);

  const Scene& scene() const { return scene_; }
  const ReflectionGroup& group() const { return group_; }

  TraceResult trace(double theta0, const TraceOptions& options = {}) const;
  TraceResult trace_from(Vec2 origin, double theta0, const TraceOptions& options = {}) const;

 private:
  Scene scene_;
  ReflectionGroup group_;
  std::vector<std::size_t> generator_of_mirror_;
};

/// One-off trace; builds the reflection group each call.
TraceResult trace(const Scene& scene, double theta0, std::size_t cap = kDefaultBounceCap);

/// Where the final straight portion of an escaped trace crosses K, and its
/// direction. Throws std::logic_error for traces that did not escape.
std::pair<Vec2, double> exit_ray(const TraceResult& tr, const EnclosingCircle& circle);

}  // namespace darksector
