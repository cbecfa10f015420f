#pragma once

// Hand-rolled generators and helpers shared by the test binaries.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "darksector/exact_angle.hpp"
#include "darksector/geometry.hpp"
#include "darksector/scene.hpp"

namespace darksector::test {

inline std::string data_path(const std::string& name) { return std::string(DARKSECTOR_DATA_DIR) + "/" + name; }

/// Shortest distance between two directions.
inline double arc_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

inline std::vector<RationalTurn> random_angles(std::mt19937_64& rng, int count, int max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  std::vector<RationalTurn> out;
  for (int i = 0; i < count; ++i) {
    long long q = den(rng);
    std::uniform_int_distribution<long long> num(0, 2 * q - 1);
    out.push_back(make_rational_turn(num(rng), q));
  }
  return out;
}

inline Scene single_mirror_scene() {
  return Scene{{Mirror{{-1.0, 0.0}, 2.0, RationalTurn(0, 1)}}, {0.0, 1.0}};
}

inline Scene toy_scene() {
  return Scene{{Mirror{{0.0, 0.0}, 1.0, RationalTurn(0, 1)}, Mirror{{0.0, 0.2}, 1.0, RationalTurn(1, 2)}},
               {0.3, 0.7}};
}

inline Scene parallel_scene(int count) {
  Scene s;
  for (int i = 0; i < count; ++i) s.mirrors.push_back(Mirror{{-1.0, double(i)}, 2.0, RationalTurn(0, 1)});
  s.source = {0.0, 0.5};
  return s;
}

/// Disjoint segments in [-2, 2]^2 with rational angles (denominator at most
/// max_den), pairwise clearance at least `gap`, and a source clear of them.
inline Scene random_scene(std::mt19937_64& rng, int mirrors, int max_den, double gap = 0.05) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0), len(0.2, 1.2);
  for (;;) {
    Scene s;
    auto angles = random_angles(rng, mirrors, max_den);
    bool ok = true;
    for (int i = 0; i < mirrors && ok; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        Mirror m{{coord(rng), coord(rng)}, len(rng), angles[i]};
        auto [a, b] = endpoints(m);
        placed = true;
        for (const auto& other : s.mirrors) {
          auto [c, d] = endpoints(other);
          placed = placed && segment_segment_distance(a, b, c, d) >= gap;
        }
        if (placed) s.mirrors.push_back(m);
      }
      ok = placed;
    }
    if (!ok) continue;
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      s.source = {coord(rng), coord(rng)};
      placed = true;
      for (const auto& m : s.mirrors) {
        auto [a, b] = endpoints(m);
        placed = placed && point_segment_distance(s.source, a, b) >= gap;
      }
    }
    if (placed) return s;
  }
}

}  // namespace darksector::test
