#pragma once

// The translation surface obtained by unfolding a rational mirror
// configuration.
//
// One slit plane per element of the reflection group; the plane labelled g
// carries the directions g(alpha) of a generic alpha. Across slit k, the
// + lip of sheet i is glued to the - lip of sheet j, where g_j = sigma_k g_i,
// and vice versa. Each sheet contributes one planar infinity (a double pole
// of the differential); slit endpoints glue into cone points (zeros).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "darksector/exact_angle.hpp"
#include "darksector/scene.hpp"

namespace darksector {

struct UnfoldedSurface {
  std::vector<GroupElement> sheets;  // canonical group order
  /// gluings[k][i]: sheet glued to sheet i across slit k (0-based here).
  std::vector<std::vector<std::size_t>> gluings;

  std::size_t sheet_count() const { return sheets.size(); }
  std::size_t slit_count() const { return gluings.size(); }
};

UnfoldedSurface build_surface(const Scene& scene, std::size_t group_order_cap = kDefaultGroupOrderCap);

enum class SlitEnd { First, Second };

struct ConeCycle {
  std::size_t slit = 0;  // 1-based
  SlitEnd endpoint = SlitEnd::First;
  std::vector<std::size_t> sheet_cycle;

  std::size_t length() const { return sheet_cycle.size(); }
  double cone_angle() const { return kTwoPi * static_cast<double>(length()); }
};

/// One cycle per orbit of (sheet, lip) states around each slit endpoint.
std::vector<ConeCycle> cone_cycles(const UnfoldedSurface& surface);

struct Zero {
  ConeCycle cycle;
  long order = 1;
};

struct Pole {
  std::size_t sheet = 0;
  long order = 2;
  long residue = 0;
};

struct SurfaceCensus {
  std::size_t sheets = 0;
  std::size_t slits = 0;
  std::vector<Zero> zeros;  // cycles with cone angle above 2pi
  std::vector<Pole> poles;
  long degree = 0;  // sum of zero orders minus sum of pole orders
  long genus = 0;
};

/// Inconsistent census or Euler characteristic.
class CensusError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

SurfaceCensus census(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles);

struct CellCounts {
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  long euler() const { return vertices - edges + faces; }
};

/// Cell structure of the closed surface, built from the gluings alone: per
/// sheet, the slit endpoints, the point at infinity, the 2n lip edges, one
/// edge joining each slit to infinity, and a single face.
CellCounts surface_cells(const UnfoldedSurface& surface);

/// Euler characteristic from surface_cells(); throws CensusError if it
/// disagrees with 2 - 2g for the census genus of `cycles`.
long euler_check(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles);

/// (m - 1) * measure_U: the total angle of dark sectors the poles other
/// than the one a direction escapes to can host.
double total_dark_angle(const SurfaceCensus& census, double measure_U);

}  // namespace darksector
