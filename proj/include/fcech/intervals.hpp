#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcech/numeric.hpp"

namespace fcech {

// Nonempty rational interval with individually open or closed ends.
// A point is represented as [x, x] with both ends closed.
struct Interval {
  Rat lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  // Empty data yields nullopt instead of an invalid interval.
  static std::optional<Interval> make(Rat lo, bool lo_closed, Rat hi, bool hi_closed);
  static Interval closed(Rat lo, Rat hi);
  static Interval open(Rat lo, Rat hi);
  static Interval point(Rat x);

  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const;
  bool contains(const Interval& other) const;
  Interval closure() const { return Interval{lo, hi, true, true}; }

  // Image under x -> scale * x + shift with scale != 0.
  Interval affine(const Rat& scale, const Rat& shift) const;

  // A representative interior point (the midpoint, or the point itself).
  Rat sample() const;

  std::string to_string() const;

  bool operator==(const Interval& o) const = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Finite union of intervals, kept normalized: parts are pairwise disjoint,
// non-adjacent, and sorted. Normalization makes equality of point sets
// coincide with structural equality.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  static IntervalSet single(Interval part);
  static IntervalSet point(Rat x);

  bool is_empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }

  bool contains(const Rat& x) const;
  bool subset_of(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet closure() const;
  bool is_closed() const;
  IntervalSet affine(const Rat& scale, const Rat& shift) const;

  // Every interval endpoint, sorted and deduplicated.
  std::vector<Rat> breakpoints() const;

  std::string to_string() const;

  bool operator==(const IntervalSet& o) const = default;

 private:
  std::vector<Interval> parts_;
};

// Subset of the circle R/Z, stored as a normalized IntervalSet inside [0,1).
// Set operations delegate to the line representation; closure is seam-aware
// (the closure of an arc ending at 1 contains the point 0).
class CircleSet {
 public:
  CircleSet() = default;
  static CircleSet empty();
  static CircleSet full();
  static CircleSet point(const Rat& x);
  // Arc from lo to hi taken in R and wrapped; hi - lo >= 1 gives the full
  // circle. Requires lo <= hi.
  static CircleSet arc(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);
  // Wraps every part of a subset of R into [0,1).
  static CircleSet from_line(const IntervalSet& s);

  bool is_empty() const { return line_.is_empty(); }
  bool is_full() const;
  const IntervalSet& line() const { return line_; }

  bool contains(const Rat& x) const;  // x taken mod 1
  bool subset_of(const CircleSet& other) const { return line_.subset_of(other.line_); }
  CircleSet unite(const CircleSet& other) const;
  CircleSet intersect(const CircleSet& other) const;
  CircleSet closure() const;
  bool is_closed() const;

  // Image under z -> scale * z + shift; well defined on R/Z only for
  // integer scale. scale = 0 collapses to a point.
  CircleSet affine(const Int& scale, const Rat& shift) const;

  std::string to_string() const;

  bool operator==(const CircleSet& o) const = default;

 private:
  explicit CircleSet(IntervalSet line) : line_(std::move(line)) {}
  IntervalSet line_;
};

}  // namespace fcech
