#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cantorvis/rational.hpp"

namespace cantorvis {

/// Closed interval [lo, hi] with lo <= hi; a point is a degenerate interval.
class Interval {
 public:
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& x) { return Interval(x, x); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  /// Closed intersection is nonempty.
  bool meets(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  /// Open interiors intersect.
  bool interiors_meet(const Interval& o) const { return lo_ < o.hi_ && o.lo_ < hi_; }

  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// Intersection of two closed intervals, or nothing.
std::vector<Interval> intersect(const Interval& a, const Interval& b);

/// Sorted union of pairwise disjoint closed intervals; touching parts are
/// merged, so consecutive parts always satisfy prev.hi < next.lo.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval single) : parts_{std::move(single)} {}

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }

  /// Sum of part lengths (the Lebesgue measure of the set).
  Rational total_length() const;
  bool contains(const Rational& x) const;
  /// Index of the part containing x, or -1.
  long locate(const Rational& x) const;
  /// The closed hull [first.lo, last.hi]; requires a nonempty set.
  Interval hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  friend IntervalSet normalize_union(std::vector<Interval> raw);
  std::vector<Interval> parts_;
};

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

/// Minimal sorted disjoint cover of the union of `raw`. Idempotent.
IntervalSet normalize_union(std::vector<Interval> raw);
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);

/// Exact image {x / y : x in num, y in den}. Requires den.lo() > 0.
Interval interval_quotient(const Interval& num, const Interval& den);

/// Exact image {r x + c : x in s}. Requires r != 0.
Interval affine_image(const Interval& iv, const Rational& r, const Rational& c);
IntervalSet affine_image(const IntervalSet& s, const Rational& r, const Rational& c);

/// Every part of `inner` lies inside some part of `outer`.
bool is_subset(const IntervalSet& inner, const IntervalSet& outer);

/// Open gaps of `outer` minus `cover` within the closed interval `outer`,
/// returned as their closures. Parts of `cover` outside `outer` are ignored.
std::vector<Interval> gaps_within(const Interval& outer, const IntervalSet& cover);

}  // namespace cantorvis
