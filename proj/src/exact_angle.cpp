#include "darksector/exact_angle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace darksector {

double wrap_two_pi(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

RationalTurn::RationalTurn(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational turn with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  // modulo 2 (i.e. 2pi)
  BigInt period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  num_ = std::move(num);
  den_ = std::move(den);
  if (num_ == 0) den_ = 1;
}

double RationalTurn::in_pi() const {
  if (den_ == 1) return num_.convert_to<double>();
  // Reduce integer part first so large numerators keep precision.
  BigInt whole = num_ / den_;
  BigInt frac = num_ % den_;
  return whole.convert_to<double>() + frac.convert_to<double>() / den_.convert_to<double>();
}

RationalTurn RationalTurn::operator+(const RationalTurn& rhs) const {
  if (den_ == rhs.den_) return RationalTurn(num_ + rhs.num_, den_);
  return RationalTurn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalTurn RationalTurn::operator-() const { return RationalTurn(-num_, den_); }

RationalTurn RationalTurn::operator-(const RationalTurn& rhs) const { return *this + (-rhs); }

RationalTurn RationalTurn::operator*(long long k) const { return RationalTurn(num_ * k, den_); }

std::strong_ordering RationalTurn::operator<=>(const RationalTurn& rhs) const {
  BigInt lhs_cross = num_ * rhs.den_;
  BigInt rhs_cross = rhs.num_ * den_;
  if (lhs_cross < rhs_cross) return std::strong_ordering::less;
  if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalTurn::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

RationalTurn make_rational_turn(long long num, long long den) { return RationalTurn(num, den); }

std::strong_ordering GroupElement::operator<=>(const GroupElement& rhs) const {
  // Rotations (s = +1) sort before reflections.
  if (s != rhs.s) return s > rhs.s ? std::strong_ordering::less : std::strong_ordering::greater;
  return c <=> rhs.c;
}

GroupElement mirror_reflection_element(const RationalTurn& r) { return {-1, r * 2}; }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  RationalTurn c = g1.s == 1 ? g2.c + g1.c : g1.c - g2.c;
  return {g1.s * g2.s, std::move(c)};
}

GroupElement inverse(const GroupElement& g) {
  if (g.s == -1) return g;
  return {1, -g.c};
}

double apply(const GroupElement& g, double theta) {
  return wrap_two_pi(g.s * theta + g.c.radians());
}

RationalTurn apply(const GroupElement& g, const RationalTurn& theta) {
  return g.s == 1 ? theta + g.c : g.c - theta;
}

std::string to_string(const GroupElement& g) {
  return std::string("(") + (g.s == 1 ? "+1" : "-1") + ", " + g.c.to_string() + ")";
}

GroupOrderExceeded::GroupOrderExceeded(std::size_t cap)
    : std::runtime_error("reflection group order exceeds cap of " + std::to_string(cap)),
      cap_(cap) {}

ReflectionGroup ReflectionGroup::generate(std::span<const RationalTurn> mirror_angles,
                                          std::size_t order_cap) {
  ReflectionGroup group;
  // Mirrors at the same angle share one generator. Angle r and r + 1 describe
  // the same line, so key the generator by its reflection element.
  for (const auto& angle : mirror_angles) {
    GroupElement gen = mirror_reflection_element(angle);
    if (std::find(group.generators_.begin(), group.generators_.end(), gen) ==
        group.generators_.end()) {
      group.generators_.push_back(gen);
    }
  }

  std::map<GroupElement, std::size_t> seen;
  std::vector<GroupElement> found{GroupElement::identity()};
  seen.emplace(found.front(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& gen : group.generators_) {
      GroupElement next = compose(gen, found[cur]);
      if (seen.count(next)) continue;
      if (found.size() >= order_cap) throw GroupOrderExceeded(order_cap);
      seen.emplace(next, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(next));
    }
  }

  std::sort(found.begin(), found.end());
  group.elements_ = std::move(found);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) group.index_.emplace(group.elements_[i], i);

  const std::size_t n = group.elements_.size();
  group.cayley_.resize(group.generators_.size() * n);
  for (std::size_t k = 0; k < group.generators_.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      group.cayley_[k * n + i] = group.index_of(compose(group.generators_[k], group.elements_[i]));
  return group;
}

std::size_t ReflectionGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element " + to_string(g) + " not in group");
  return it->second;
}

std::size_t ReflectionGroup::generator_index(const RationalTurn& mirror_angle) const {
  GroupElement gen = mirror_reflection_element(mirror_angle);
  auto it = std::find(generators_.begin(), generators_.end(), gen);
  if (it == generators_.end())
    throw std::out_of_range("no generator for mirror angle " + mirror_angle.to_string());
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t generic_orbit_size(const ReflectionGroup& group) { return group.order(); }

}  // namespace darksector
