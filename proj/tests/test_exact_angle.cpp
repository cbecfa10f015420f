#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "darksector/exact_angle.hpp"
#include "support.hpp"

using namespace darksector;

namespace {

GroupElement el(int s, long long num, long long den) { return {s, RationalTurn(num, den)}; }

// Closure by repeated all-pairs composition until the set stops growing.
std::set<GroupElement> brute_force_closure(const std::vector<RationalTurn>& angles) {
  std::set<GroupElement> set{GroupElement::identity()};
  for (const auto& r : angles) set.insert(mirror_reflection_element(r));
  for (;;) {
    std::set<GroupElement> next = set;
    for (const auto& a : set)
      for (const auto& b : set) next.insert(compose(a, b));
    if (next.size() == set.size()) return set;
    set = std::move(next);
  }
}

}  // namespace

TEST_CASE("make_rational_turn canonicalizes modulo 2") {
  CHECK(make_rational_turn(3, 2) == RationalTurn(3, 2));
  CHECK(make_rational_turn(10, 4).to_string() == "1/2");
  CHECK(make_rational_turn(-1, 2).to_string() == "3/2");
  CHECK(make_rational_turn(4, 1).to_string() == "0");
  CHECK(make_rational_turn(7, -3).to_string() == "5/3");
  CHECK_THROWS_AS(make_rational_turn(1, 0), std::domain_error);
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-500, 500), den(1, 60);
  for (int i = 0; i < 500; ++i) {
    RationalTurn t = make_rational_turn(num(rng), den(rng));
    RationalTurn again(t.num(), t.den());
    CHECK(again == t);
    CHECK(t.in_pi() >= 0.0);
    CHECK(t.in_pi() < 2.0);
  }
}

TEST_CASE("exact arithmetic stays reduced") {
  CHECK((RationalTurn(1, 3) + RationalTurn(1, 6)) == RationalTurn(1, 2));
  CHECK((RationalTurn(1, 3) - RationalTurn(1, 2)) == RationalTurn(11, 6));
  CHECK((-RationalTurn(1, 4)) == RationalTurn(7, 4));
  CHECK((RationalTurn(3, 4) * 4) == RationalTurn(1, 1));
  BigInt huge = BigInt(1) << 100;
  RationalTurn t(3 * huge + 1, huge);
  CHECK(t.den() == huge);
  CHECK(t.num() == huge + 1);
}

TEST_CASE("mirror_reflection_element") {
  CHECK(mirror_reflection_element(RationalTurn(0, 1)) == el(-1, 0, 1));
  CHECK(mirror_reflection_element(RationalTurn(1, 2)) == el(-1, 1, 1));
  CHECK(mirror_reflection_element(RationalTurn(1, 3)) == el(-1, 2, 3));
}

TEST_CASE("compose follows g1 after g2") {
  CHECK(compose(el(-1, 0, 1), el(-1, 0, 1)) == GroupElement::identity());
  CHECK(compose(el(-1, 1, 1), el(-1, 0, 1)) == el(1, 1, 1));
  CHECK(compose(el(-1, 2, 3), el(-1, 0, 1)) == el(1, 2, 3));
}

TEST_CASE("apply examples") {
  CHECK(apply(el(-1, 0, 1), kPi / 3) == doctest::Approx(5 * kPi / 3).epsilon(1e-15));
  CHECK(apply(el(1, 1, 1), kPi / 3) == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
  CHECK(apply(el(-1, 2, 3), 0.0) == doctest::Approx(2 * kPi / 3).epsilon(1e-15));
  CHECK(apply(el(-1, 2, 3), RationalTurn(0, 1)) == RationalTurn(2, 3));
}

TEST_CASE("group orders and generic orbit size") {
  std::vector<RationalTurn> toy{RationalTurn(0, 1), RationalTurn(1, 2)};
  auto g = ReflectionGroup::generate(toy);
  CHECK(g.order() == 4);
  CHECK(generic_orbit_size(g) == 4);
  std::set<GroupElement> expected{el(1, 0, 1), el(-1, 0, 1), el(-1, 1, 1), el(1, 1, 1)};
  CHECK(std::set<GroupElement>(g.elements().begin(), g.elements().end()) == expected);
  CHECK(g.elements().front().is_identity());

  std::vector<RationalTurn> one{RationalTurn(0, 1)};
  CHECK(ReflectionGroup::generate(one).order() == 2);

  std::vector<RationalTurn> sixth{RationalTurn(0, 1), RationalTurn(1, 3)};
  auto g6 = ReflectionGroup::generate(sixth);
  CHECK(g6.order() == brute_force_closure(sixth).size());
  CHECK(g6.order() == 6);

  // Orbit of a generic direction, counted numerically.
  const double theta = 0.123456789 * std::sqrt(2.0);
  std::vector<double> orbit;
  for (const auto& e : g6.elements()) {
    double v = apply(e, theta);
    bool fresh = true;
    for (double w : orbit) fresh = fresh && std::abs(w - v) > 1e-9;
    if (fresh) orbit.push_back(v);
  }
  CHECK(orbit.size() == 6);

  CHECK(ReflectionGroup::generate(std::span<const RationalTurn>{}).order() == 1);
}

TEST_CASE("group-order cap") {
  std::vector<RationalTurn> fine{RationalTurn(0, 1), RationalTurn(1, 997)};
  CHECK_THROWS_AS(ReflectionGroup::generate(fine, 100), GroupOrderExceeded);
  CHECK(ReflectionGroup::generate(fine).order() == 2 * 997);
}

TEST_CASE("property: generated groups match brute-force closure") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto angles = test::random_angles(rng, 1 + trial % 4, 12);
    auto g = ReflectionGroup::generate(angles);
    auto oracle = brute_force_closure(angles);
    REQUIRE(g.order() == oracle.size());
    for (const auto& e : g.elements()) CHECK(oracle.count(e) == 1);
    CHECK(g.order() % 2 == 0);
  }
}

TEST_CASE("property: involution, closure, Cayley table") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    auto angles = test::random_angles(rng, 1 + trial % 5, 12);
    auto g = ReflectionGroup::generate(angles);
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const auto& gen = g.generators()[k];
      CHECK(compose(gen, gen).is_identity());
      for (std::size_t i = 0; i < g.order(); ++i) {
        GroupElement prod = compose(gen, g.elements()[i]);
        REQUIRE(g.contains(prod));
        CHECK(g.left_multiply(k, i) == g.index_of(prod));
      }
    }
    for (const auto& e : g.elements()) {
      CHECK(g.contains(inverse(e)));
      CHECK(compose(e, inverse(e)).is_identity());
    }
  }
}

TEST_CASE("property: apply is a homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 200; ++trial) {
    auto angles = test::random_angles(rng, 3, 12);
    auto g = ReflectionGroup::generate(angles);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    const auto& a = g.elements()[pick(rng)];
    const auto& b = g.elements()[pick(rng)];
    double theta = angle(rng);
    CHECK(test::arc_gap(apply(compose(a, b), theta), apply(a, apply(b, theta))) <= 1e-12);
  }
}
