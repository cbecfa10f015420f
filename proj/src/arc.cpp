#include "darksector/arc.hpp"

#include <algorithm>
#include <cmath>

#include "darksector/exact_angle.hpp"

namespace darksector {

Arc Arc::from_length(double start, double length) {
  double s = wrap_two_pi(start);
  if (length >= kTwoPi) return {s, s};
  return {s, wrap_two_pi(s + length)};
}

Arc Arc::full() { return {0.0, 0.0}; }

double Arc::measure() const {
  if (is_full()) return kTwoPi;
  return end > start ? end - start : end - start + kTwoPi;
}

double Arc::midpoint() const { return wrap_two_pi(start + 0.5 * measure()); }

bool Arc::contains(double theta) const {
  if (is_full()) return true;
  double d = ccw_distance(start, theta);
  return d > 0.0 && d < measure();
}

Arc Arc::shrunk(double by) const { return from_length(start + by, measure() - 2.0 * by); }

double ccw_distance(double a, double b) { return wrap_two_pi(b - a); }

double circle_distance(double a, double b) {
  double d = ccw_distance(a, b);
  return std::min(d, kTwoPi - d);
}

std::vector<Interval> unwrap(const Arc& arc) {
  if (arc.is_full()) return {{0.0, kTwoPi}};
  if (arc.end > arc.start) return {{arc.start, arc.end}};
  std::vector<Interval> out;
  if (arc.start < kTwoPi) out.push_back({arc.start, kTwoPi});
  if (arc.end > 0.0) out.push_back({0.0, arc.end});
  return out;
}

std::vector<Interval> unwrap(const std::vector<Arc>& arcs) {
  std::vector<Interval> out;
  for (const auto& a : arcs) {
    auto parts = unwrap(a);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

std::vector<Interval> normalize(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& i) { return !(i.hi > i.lo); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Interval> out;
  for (const auto& i : intervals) {
    if (!out.empty() && i.lo < out.back().hi) {
      out.back().hi = std::max(out.back().hi, i.hi);
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Interval> subtract_closed(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& piece : a) {
    double lo = piece.lo;
    while (j < b.size() && b[j].hi <= lo) ++j;
    std::size_t k = j;
    while (k < b.size() && b[k].lo < piece.hi) {
      if (b[k].lo > lo) out.push_back({lo, b[k].lo});
      lo = std::max(lo, b[k].hi);
      ++k;
    }
    if (lo < piece.hi) out.push_back({lo, piece.hi});
  }
  return out;
}

double intersection_measure(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double lo = std::max(a[i].lo, b[j].lo);
    double hi = std::min(a[i].hi, b[j].hi);
    if (hi > lo) total += hi - lo;
    if (a[i].hi < b[j].hi) ++i; else ++j;
  }
  return total;
}

std::vector<Arc> rewrap(const std::vector<Interval>& intervals) {
  std::vector<Arc> out;
  if (intervals.empty()) return out;
  if (intervals.size() == 1 && intervals.front().lo <= 0.0 && intervals.front().hi >= kTwoPi)
    return {Arc::full()};
  std::size_t first = 0, last = intervals.size();
  bool join = intervals.size() >= 2 && intervals.front().lo <= 0.0 && intervals.back().hi >= kTwoPi;
  if (join) {
    ++first;
    --last;
  }
  for (std::size_t i = first; i < last; ++i)
    out.push_back({wrap_two_pi(intervals[i].lo), wrap_two_pi(intervals[i].hi)});
  if (join) out.push_back({intervals.back().lo, intervals.front().hi});
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
  return out;
}

bool arc_within(const Arc& inner, const Arc& outer, double tol) {
  if (outer.is_full()) return true;
  if (inner.is_full()) return false;
  // Measure inner's endpoints from outer.start; tol lets an endpoint stick out.
  double a = ccw_distance(outer.start, inner.start);
  if (a > kTwoPi - tol) a -= kTwoPi;
  return a >= -tol && a + inner.measure() <= outer.measure() + tol;
}

}  // namespace darksector
