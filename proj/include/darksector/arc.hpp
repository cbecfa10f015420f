#pragma once

// Open arcs of the direction circle and boolean operations on arc sets.
//
// An Arc runs counterclockwise from start to end and may wrap through 0.
// start == end denotes the full circle. Set operations work on the
// unwrapped form: sorted disjoint intervals of [0, 2pi).

#include <vector>

namespace darksector {

struct Arc {
  double start = 0.0;  // [0, 2pi)
  double end = 0.0;    // [0, 2pi)

  /// Arc from start sweeping counterclockwise by length (0, 2pi].
  static Arc from_length(double start, double length);
  static Arc full();

  double measure() const;
  double midpoint() const;
  bool is_full() const { return start == end; }
  bool wraps() const { return end <= start; }
  /// Open-arc membership, for any representative of theta.
  bool contains(double theta) const;
  /// Arc shrunk by `by` at each end; caller keeps 2*by < measure().
  Arc shrunk(double by) const;
};

/// Counterclockwise distance from a to b, in [0, 2pi).
double ccw_distance(double a, double b);
/// Shortest distance between two directions, in [0, pi].
double circle_distance(double a, double b);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// One interval, or two when the arc wraps through 0.
std::vector<Interval> unwrap(const Arc& arc);
std::vector<Interval> unwrap(const std::vector<Arc>& arcs);

/// Sorted union; intervals that only touch stay separate.
std::vector<Interval> normalize(std::vector<Interval> intervals);

/// a minus the closure of b, as open intervals. Both inputs normalized.
std::vector<Interval> subtract_closed(const std::vector<Interval>& a, const std::vector<Interval>& b);

double intersection_measure(const std::vector<Interval>& a, const std::vector<Interval>& b);

/// Rewraps normalized intervals into arcs, joining a piece ending at 2pi
/// with one starting at 0.
std::vector<Arc> rewrap(const std::vector<Interval>& intervals);

/// True when `inner` lies within `outer` up to tol at either end.
bool arc_within(const Arc& inner, const Arc& outer, double tol = 0.0);

}  // namespace darksector
