#include <cmath>
#include <random>

#include "doctest.h"
#include "darksector/dark_sector.hpp"
#include "support.hpp"

using namespace darksector;

namespace {

const EnclosingCircle kK{{0.0, 0.5}, 2.0};

DarkSector single_mirror_sector() {
  return build_sector(make_dark_arc(Arc{5 * kPi / 4, 7 * kPi / 4}, 0), kK);
}

// Distance from O to the line through p with direction theta.
double line_distance(Vec2 o, Vec2 p, double theta) { return std::abs(cross(unit(theta), o - p)); }

}  // namespace

TEST_CASE("select_dark_arc") {
  CHECK_FALSE(select_dark_arc({}).has_value());

  auto one = select_dark_arc({Arc{5 * kPi / 4, 7 * kPi / 4}});
  REQUIRE(one);
  CHECK_FALSE(one->shrunk);
  CHECK(one->arc.measure() == doctest::Approx(kPi / 2));

  auto wide = select_dark_arc({Arc{0.1, 0.2}, Arc::from_length(1.0, 3 * kPi / 2)});
  REQUIRE(wide);
  CHECK(wide->unlit_index == 1);
  CHECK(wide->shrunk);
  CHECK(wide->arc.measure() == doctest::Approx(kPi - 1e-6).epsilon(1e-12));
  CHECK(test::arc_gap(wide->arc.midpoint(), 1.0 + 3 * kPi / 4) < 1e-12);
}

TEST_CASE("build_sector examples") {
  DarkSector s = single_mirror_sector();
  const double r2 = std::sqrt(2.0);
  CHECK(s.tangent1.x == doctest::Approx(r2));
  CHECK(s.tangent1.y == doctest::Approx(0.5 - r2));
  CHECK(s.tangent2.x == doctest::Approx(-r2));
  CHECK(s.tangent2.y == doctest::Approx(0.5 - r2));
  CHECK(std::abs(s.apex.x) <= 1e-12);
  CHECK(std::abs(s.apex.y - (0.5 - 2 * r2)) <= 1e-12);
  CHECK(s.angle() == doctest::Approx(kPi / 2));

  DarkSector up = build_sector(make_dark_arc(Arc{kPi / 4, 3 * kPi / 4}, 0), EnclosingCircle{{0, 0}, 1.0});
  CHECK(std::abs(up.apex.x) <= 1e-12);
  CHECK(std::abs(up.apex.y - r2) <= 1e-12);
  CHECK(contains(up, {0.0, 10.0}));

  // The apex sits at R / sin(mu / 2) from O: far away for thin arcs, near K
  // for arcs approaching pi.
  for (double mu : {1e-6, 0.3, kPi / 2, 3.0, kPi - 1e-6}) {
    DarkSector s_mu = build_sector(make_dark_arc(Arc::from_length(1.0, mu), 0), kK);
    CHECK(distance(s_mu.apex, kK.center) == doctest::Approx(2.0 / std::sin(mu / 2)).epsilon(1e-9));
  }

  DarkArc too_wide{Arc::from_length(0.0, kPi), 0, false};
  CHECK_THROWS_AS(build_sector(too_wide, kK), std::invalid_argument);
}

TEST_CASE("direction_arc") {
  Arc far = direction_arc({0.0, -100.0}, kK);
  CHECK(far.midpoint() == doctest::Approx(3 * kPi / 2));
  CHECK(far.measure() / 2 == doctest::Approx(std::asin(2.0 / 100.5)));
  CHECK(far.measure() / 2 == doctest::Approx(0.019905).epsilon(1e-4));

  Arc twice = direction_arc({4.0, 0.5}, kK);
  CHECK(twice.measure() / 2 == doctest::Approx(kPi / 6));

  CHECK_THROWS_AS(direction_arc({0.0, 1.0}, kK), std::invalid_argument);
  CHECK_THROWS_AS(direction_arc({2.0, 0.5}, kK), std::invalid_argument);
}

TEST_CASE("contains") {
  DarkSector s = single_mirror_sector();
  CHECK(contains(s, {0.0, -100.0}));
  CHECK_FALSE(contains(s, {100.0, 0.0}));
  CHECK_FALSE(contains(s, s.apex));
  CHECK(ray_enters(s, {0.0, 0.0}, 3 * kPi / 2));
  CHECK_FALSE(ray_enters(s, {0.0, 0.0}, kPi / 2));
}

TEST_CASE("property: tangency, angle, disk disjointness, monotonicity") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), len(1e-3, kPi - 1e-3), frac(0.0, 1.0),
      radius(0.1, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    EnclosingCircle k{{frac(rng) * 4 - 2, frac(rng) * 4 - 2}, radius(rng)};
    Arc big = Arc::from_length(angle(rng), len(rng));
    double cut = frac(rng) * 0.45 * big.measure();
    Arc small = Arc::from_length(big.start + cut, big.measure() - 2 * cut);
    DarkSector sb = build_sector(make_dark_arc(big, 0), k);
    DarkSector ss = build_sector(make_dark_arc(small, 0), k);

    CHECK(std::abs(sb.angle() - big.measure()) <= 1e-12);
    CHECK(line_distance(k.center, sb.apex, sb.dir_lo) == doctest::Approx(k.radius).epsilon(1e-9));
    CHECK(line_distance(k.center, sb.apex, sb.dir_hi) == doctest::Approx(k.radius).epsilon(1e-9));
    CHECK(distance(sb.apex, k.center) >= k.radius * (1 - 1e-12));

    for (int j = 0; j < 20; ++j) {
      double r = k.radius * std::pow(10.0, 3 * frac(rng));
      Vec2 p = ss.apex + unit(ss.dir_lo + frac(rng) * ss.angle()) * r;
      if (!contains(ss, p)) continue;
      CHECK(distance(p, k.center) > k.radius);
      CHECK(contains(sb, p));
      CHECK(arc_within(direction_arc(p, k), small, 1e-12));
    }
  }
}

TEST_CASE("single-mirror pipeline verifies") {
  Tracer tracer(test::single_mirror_scene());
  DecompositionParams p;
  p.seeds = 1024;
  auto a = analyze_sectors(tracer, kK, p, 1000, 7);
  REQUIRE(a.chosen);
  REQUIRE(a.verification);
  CHECK(a.verification->oracle_inclusion.passed);
  CHECK(a.verification->oracle_inclusion.checked == 1000);
  CHECK(a.verification->image_disjoint.passed);
  CHECK(a.verification->exit_rays.passed);
  CHECK(a.certified());
  const DarkSector& s = a.sectors[*a.chosen];
  CHECK(std::abs(s.apex.x) <= 1e-8);
  CHECK(std::abs(s.apex.y - (0.5 - 2 * std::sqrt(2.0))) <= 1e-8);

  auto none = verify_darkness(s, a.dark_arcs[*a.chosen], a.decomposition, tracer, 0, 7);
  CHECK(none.oracle_inclusion.checked == 0);
  CHECK(none.oracle_inclusion.passed);
  CHECK(none.image_disjoint.passed);
  CHECK(none.exit_rays.checked > 0);
  CHECK(none.passed());
}

TEST_CASE("negative control: an arc overlapping an image fails check (ii)") {
  Tracer tracer(test::single_mirror_scene());
  DecompositionParams p;
  p.seeds = 1024;
  auto d = decompose(tracer, kK, p);
  // (pi/4, 3pi/4) is the image of the reflected component.
  DarkArc corrupt = make_dark_arc(Arc{kPi / 4, 3 * kPi / 4}, 0);
  DarkSector s = build_sector(corrupt, kK);
  auto report = verify_darkness(s, corrupt, d, tracer, 100, 1);
  CHECK_FALSE(report.image_disjoint.passed);
  CHECK_FALSE(report.image_disjoint.detail.empty());
  CHECK_FALSE(report.exit_rays.passed);
  CHECK_FALSE(report.passed());
}

TEST_CASE("injective map certifies nothing") {
  Tracer tracer(Scene{{}, {0.0, 0.0}});
  DecompositionParams p;
  p.seeds = 64;
  auto a = analyze_sectors(tracer, EnclosingCircle{{0, 0}, 1.0}, p, 100, 1);
  CHECK(a.injectivity.injective);
  CHECK_FALSE(a.chosen);
  CHECK_FALSE(a.certified());
}
