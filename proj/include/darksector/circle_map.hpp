#pragma once

// The escape-direction circle map of a light source.
//
// Directions whose reflected ray escapes to infinity form an open set U of
// the circle. On each maximal arc of U with a constant itinerary the exit
// direction is a fixed element of the reflection group applied to the
// emission direction. decompose() recovers those arcs by seeding the circle
// and bisecting between seeds whose itineraries differ.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "darksector/arc.hpp"
#include "darksector/exact_angle.hpp"
#include "darksector/scene.hpp"
#include "darksector/tracer.hpp"

namespace darksector {

struct DecompositionParams {
  std::size_t seeds = 4096;
  double eps_b = 1e-10;
  std::size_t cap = kDefaultBounceCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws std::invalid_argument unless seeds >= 8, cap >= 1, 0 < eps_b <= 1e-3.
void check_params(const DecompositionParams& params);

struct MapComponent {
  Arc arc;
  Itinerary itinerary;
  GroupElement isometry;
  std::size_t isometry_index = 0;  // into the scene's group
  Arc image;
};

struct Decomposition {
  std::vector<MapComponent> components;  // sorted by arc start
  std::vector<double> singular_directions;  // every run boundary, sorted
  std::vector<Arc> singular_arcs;  // runs whose samples hit a mirror endpoint
  std::vector<Arc> trapped_arcs;   // runs that exceeded the bounce cap
  double measure_U = 0.0;
  DecompositionParams params;
  EnclosingCircle circle;
  std::size_t group_order = 1;
  std::size_t trace_count = 0;
};

/// Two samples inside one run disagree on the exact isometry.
class DecompositionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Decomposition decompose(const Tracer& tracer, const EnclosingCircle& circle,
                        const DecompositionParams& params = {});
Decomposition decompose(const Scene& scene, const EnclosingCircle& circle,
                        const DecompositionParams& params = {});

/// Image of an arc under theta -> s*theta + c*pi.
Arc image_of(const Arc& arc, const GroupElement& g);

std::vector<Arc> image_arcs(const Decomposition& d);

struct Injectivity {
  bool injective = true;
  /// Two distinct directions with the same exit direction.
  std::optional<std::pair<double, double>> witness;
  std::size_t first_component = 0;
  std::size_t second_component = 0;
};

/// Overlaps of image arcs shorter than overlap_tol are attributed to boundary
/// localization error and ignored. Default: 4 * eps_b.
Injectivity is_injective(const Decomposition& d, std::optional<double> overlap_tol = std::nullopt);

/// Arcs of U outside the closure of f(U), each kept at least eps_b away from
/// every image arc.
std::vector<Arc> unlit_arcs(const Decomposition& d);

double measure_U(const Decomposition& d);

}  // namespace darksector
