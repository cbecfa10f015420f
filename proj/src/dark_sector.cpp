#include "darksector/dark_sector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace darksector {

DarkArc make_dark_arc(const Arc& arc, std::size_t unlit_index) {
  DarkArc dark{arc, unlit_index, false};
  if (arc.measure() >= kPi) {
    dark.arc = Arc::from_length(arc.midpoint() - 0.5 * (kPi - kWideArcGap), kPi - kWideArcGap);
    dark.shrunk = true;
  }
  return dark;
}

std::optional<DarkArc> select_dark_arc(const std::vector<Arc>& unlit) {
  if (unlit.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < unlit.size(); ++i)
    if (unlit[i].measure() > unlit[best].measure()) best = i;
  return make_dark_arc(unlit[best], best);
}

DarkSector build_sector(const DarkArc& dark, const EnclosingCircle& circle) {
  const double width = dark.arc.measure();
  if (!(width < kPi)) throw std::invalid_argument("dark arc must be narrower than pi");
  DarkSector s;
  s.circle = circle;
  s.dir_lo = dark.arc.start;
  s.dir_hi = dark.arc.end;
  const Vec2 u_lo = unit(s.dir_lo);
  const Vec2 u_hi = unit(s.dir_hi);
  s.tangent1 = circle.center + unit(s.dir_lo + 0.5 * kPi) * circle.radius;
  s.tangent2 = circle.center + unit(s.dir_hi - 0.5 * kPi) * circle.radius;
  // tangent1 + a*u_lo == tangent2 + b*u_hi
  const double a = cross(s.tangent2 - s.tangent1, u_hi) / cross(u_lo, u_hi);
  s.apex = s.tangent1 + u_lo * a;
  return s;
}

Arc direction_arc(Vec2 p, const EnclosingCircle& circle) {
  const Vec2 w = p - circle.center;
  const double d = norm(w);
  if (!(d > circle.radius)) throw std::invalid_argument("point is not outside the circle");
  const double psi = direction_of(w);
  const double half = std::asin(circle.radius / d);
  return Arc::from_length(psi - half, 2.0 * half);
}

bool contains(const DarkSector& sector, Vec2 p) {
  const Vec2 w = p - sector.apex;
  return cross(unit(sector.dir_lo), w) > 0.0 && cross(unit(sector.dir_hi), w) < 0.0;
}

bool ray_enters(const DarkSector& sector, Vec2 origin, double theta) {
  const Vec2 v = unit(theta);
  const Vec2 w = origin - sector.apex;
  // Each boundary gives c0 + c1*t > 0; intersect the solution sets with t >= 0.
  const double constraints[2][2] = {
      {cross(unit(sector.dir_lo), w), cross(unit(sector.dir_lo), v)},
      {-cross(unit(sector.dir_hi), w), -cross(unit(sector.dir_hi), v)},
  };
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& c : constraints) {
    if (c[1] == 0.0) {
      if (!(c[0] > 0.0)) return false;
    } else if (c[1] > 0.0) {
      lo = std::max(lo, -c[0] / c[1]);
    } else {
      hi = std::min(hi, -c[0] / c[1]);
    }
  }
  return lo < hi;
}

DarknessReport verify_darkness(const DarkSector& sector, const DarkArc& dark,
                               const Decomposition& d, const Tracer& tracer,
                               std::size_t samples, std::uint64_t seed) {
  DarknessReport report;
  // (i) pointwise oracle
  {
    auto& check = report.oracle_inclusion;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit_interval(0.0, 1.0);
    const double width = sector.angle();
    for (std::size_t i = 0; i < samples; ++i) {
      double t = unit_interval(rng);
      double theta = sector.dir_lo + width * (t > 0.0 ? t : 0.5);
      double r = sector.circle.radius * std::pow(10.0, 6.0 * unit_interval(rng));
      Vec2 p = sector.apex + unit(theta) * r;
      if (!contains(sector, p)) {
        // Sample rounded onto the boundary; not a point of the open sector.
        ++check.skipped;
        continue;
      }
      ++check.checked;
      Arc seen = direction_arc(p, sector.circle);
      if (!arc_within(seen, dark.arc, 1e-12)) {
        check.passed = false;
        if (check.detail.empty())
          check.detail = fmt::format("point ({:.17g}, {:.17g}) sees directions ({:.17g}, {:.17g})",
                                     p.x, p.y, seen.start, seen.end);
      }
    }
  }

  // (ii) the dark arc is disjoint from f(U)
  {
    auto& check = report.image_disjoint;
    auto images = normalize(unwrap(image_arcs(d)));
    check.checked = d.components.size();
    double overlap = intersection_measure(normalize(unwrap(dark.arc)), images);
    if (overlap > 0.0) {
      check.passed = false;
      check.detail = fmt::format("dark arc overlaps image arcs in measure {:.17g}", overlap);
    }
  }

  // (iii) exit rays of every component stay out of the sector
  {
    auto& check = report.exit_rays;
    TraceOptions options;
    options.cap = d.params.cap;
    options.record_path = false;
    for (const auto& c : d.components) {
      const double m = c.arc.measure();
      const double inset = std::min(d.params.eps_b, 0.25 * m);
      for (double offset : {inset, 0.5 * m, m - inset}) {
        double theta = wrap_two_pi(c.arc.start + offset);
        TraceResult tr = tracer.trace(theta, options);
        if (tr.status != TraceStatus::Escaped) {
          ++check.skipped;
          continue;
        }
        ++check.checked;
        auto [q, dir] = exit_ray(tr, d.circle);
        if (ray_enters(sector, q, dir)) {
          check.passed = false;
          if (check.detail.empty())
            check.detail = fmt::format("exit ray of direction {:.17g} (emitted at {:.17g}) enters the sector",
                                       dir, theta);
        }
      }
    }
  }
  return report;
}

SectorAnalysis analyze_sectors(const Tracer& tracer, const EnclosingCircle& circle,
                               const DecompositionParams& params, std::size_t samples,
                               std::uint64_t seed) {
  SectorAnalysis a;
  a.decomposition = decompose(tracer, circle, params);
  a.injectivity = is_injective(a.decomposition);
  a.unlit = unlit_arcs(a.decomposition);
  for (std::size_t i = 0; i < a.unlit.size(); ++i) {
    a.dark_arcs.push_back(make_dark_arc(a.unlit[i], i));
    a.sectors.push_back(build_sector(a.dark_arcs.back(), circle));
  }
  if (auto best = select_dark_arc(a.unlit)) {
    a.chosen = best->unlit_index;
    a.verification = verify_darkness(a.sectors[*a.chosen], a.dark_arcs[*a.chosen], a.decomposition,
                                     tracer, samples, seed);
  }
  return a;
}

}  // namespace darksector
