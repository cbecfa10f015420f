#pragma once

// Exact directions and the finite reflection group acting on them.
//
// A direction that is a rational multiple of pi is stored as a reduced
// fraction num/den in units of pi, normalized to [0, 2). Mirror reflections
// act on the direction circle as theta -> s*theta + c*pi; such maps compose
// exactly, so the dihedral group generated by a rational mirror
// configuration can be enumerated without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace darksector {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduce an angle in radians to [0, 2pi).
double wrap_two_pi(double theta);

/// Angle (num/den)*pi, reduced and normalized modulo 2*pi.
class RationalTurn {
 public:
  RationalTurn() : num_(0), den_(1) {}
  /// Throws std::domain_error on a zero denominator.
  RationalTurn(BigInt num, BigInt den);
  RationalTurn(long long num, long long den) : RationalTurn(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  /// Value in units of pi, in [0, 2).
  double in_pi() const;
  /// Value in radians, in [0, 2pi).
  double radians() const { return in_pi() * kPi; }

  RationalTurn operator+(const RationalTurn& rhs) const;
  RationalTurn operator-(const RationalTurn& rhs) const;
  RationalTurn operator-() const;
  /// Multiplication by an integer (mod 2).
  RationalTurn operator*(long long k) const;

  bool operator==(const RationalTurn&) const = default;
  std::strong_ordering operator<=>(const RationalTurn& rhs) const;

  /// "p/q" (or "p" when den == 1), in units of pi.
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
};

RationalTurn make_rational_turn(long long num, long long den);

/// The circle isometry theta -> s*theta + c*pi.
struct GroupElement {
  int s = 1;
  RationalTurn c;

  static GroupElement identity() { return {}; }

  bool is_identity() const { return s == 1 && c.is_zero(); }

  bool operator==(const GroupElement&) const = default;
  std::strong_ordering operator<=>(const GroupElement& rhs) const;
};

/// Reflection of directions in a line at angle r*pi: theta -> 2*r*pi - theta.
GroupElement mirror_reflection_element(const RationalTurn& r);

/// g1 after g2.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// s*theta + c*pi reduced to [0, 2pi).
double apply(const GroupElement& g, double theta);

/// Exact image of a rational direction.
RationalTurn apply(const GroupElement& g, const RationalTurn& theta);

std::string to_string(const GroupElement& g);

class GroupOrderExceeded : public std::runtime_error {
 public:
  explicit GroupOrderExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 10000;

/// The finite group generated by the reflections in a set of mirror angles.
///
/// Elements are kept in canonical order: orientation-preserving elements
/// first, then reflections, each sorted by c. The identity is element 0.
class ReflectionGroup {
 public:
  /// An empty angle set yields the trivial group.
  static ReflectionGroup generate(std::span<const RationalTurn> mirror_angles,
                                  std::size_t order_cap = kDefaultGroupOrderCap);

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const GroupElement& g) const { return index_.count(g) != 0; }
  /// Throws std::out_of_range if g is not in the group.
  std::size_t index_of(const GroupElement& g) const;
  /// Index of the generator for a mirror angle; throws if absent.
  std::size_t generator_index(const RationalTurn& mirror_angle) const;

  /// Index of compose(generators()[gen], elements()[elem]).
  std::size_t left_multiply(std::size_t gen, std::size_t elem) const {
    return cayley_[gen * elements_.size() + elem];
  }

 private:
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::map<GroupElement, std::size_t> index_;
  std::vector<std::size_t> cayley_;
};

/// Length of the orbit of a generic direction; equals the group order since
/// only the identity fixes a direction outside a finite set.
std::size_t generic_orbit_size(const ReflectionGroup& group);

}  // namespace darksector
