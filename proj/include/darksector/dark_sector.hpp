#pragma once

// Unlit direction arcs become unilluminated planar sectors.
//
// For an arc (lo, hi) of directions that no exit ray takes, the lines tangent
// to K in directions lo and hi (touching K a quarter turn before lo and a
// quarter turn after hi) meet at an apex outside K. Every point of the open
// sector between them sees K only through directions in (lo, hi), so no
// escaping ray reaches it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "darksector/arc.hpp"
#include "darksector/circle_map.hpp"
#include "darksector/geometry.hpp"
#include "darksector/scene.hpp"
#include "darksector/tracer.hpp"

namespace darksector {

/// Arcs of measure >= pi are shrunk about their midpoint to pi - this.
inline constexpr double kWideArcGap = 1e-6;

struct DarkArc {
  Arc arc;
  std::size_t unlit_index = 0;  // position in the unlit_arcs() list
  bool shrunk = false;
};

/// Largest unlit arc, shrunk below pi if needed; nullopt for an empty list.
std::optional<DarkArc> select_dark_arc(const std::vector<Arc>& unlit);
/// Same shrink rule applied to one arc.
DarkArc make_dark_arc(const Arc& arc, std::size_t unlit_index);

struct DarkSector {
  Vec2 apex;
  double dir_lo = 0.0;
  double dir_hi = 0.0;
  Vec2 tangent1;  // on K, where the dir_lo boundary line touches
  Vec2 tangent2;  // on K, where the dir_hi boundary line touches
  EnclosingCircle circle;

  double angle() const { return Arc{dir_lo, dir_hi}.measure(); }
};

/// Throws std::invalid_argument when the arc measure is not below pi.
DarkSector build_sector(const DarkArc& dark, const EnclosingCircle& circle);

/// Directions of all rays leaving K that pass through p. Throws
/// std::invalid_argument when p is not outside K.
Arc direction_arc(Vec2 p, const EnclosingCircle& circle);

/// Strictly inside the open sector.
bool contains(const DarkSector& sector, Vec2 p);

/// Does the ray origin + t*unit(theta), t >= 0, enter the open sector?
bool ray_enters(const DarkSector& sector, Vec2 origin, double theta);

struct DarknessCheck {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string detail;  // first failure, if any
};

struct DarknessReport {
  DarknessCheck oracle_inclusion;  // sampled sector points see K only through the dark arc
  DarknessCheck image_disjoint;    // dark arc misses every image arc
  DarknessCheck exit_rays;         // sampled exit rays never enter the sector
  bool passed() const { return oracle_inclusion.passed && image_disjoint.passed && exit_rays.passed; }
};

/// Sample radii are log-uniform in [1, 1e6] * R from the apex.
DarknessReport verify_darkness(const DarkSector& sector, const DarkArc& dark,
                               const Decomposition& d, const Tracer& tracer,
                               std::size_t samples, std::uint64_t seed);

/// Everything the sectors command computes for one scene.
struct SectorAnalysis {
  Decomposition decomposition;
  Injectivity injectivity;
  std::vector<Arc> unlit;
  std::vector<DarkArc> dark_arcs;     // one per unlit arc, in unlit order
  std::vector<DarkSector> sectors;    // built from dark_arcs
  std::optional<std::size_t> chosen;  // index of the largest arc
  std::optional<DarknessReport> verification;  // for the chosen sector

  bool certified() const { return chosen.has_value() && verification && verification->passed(); }
};

/// Decompose, find unlit arcs, build a sector per arc, verify the largest.
SectorAnalysis analyze_sectors(const Tracer& tracer, const EnclosingCircle& circle,
                               const DecompositionParams& params, std::size_t samples,
                               std::uint64_t seed);

}  // namespace darksector
