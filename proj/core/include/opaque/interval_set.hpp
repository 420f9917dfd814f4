#pragma once

#include <optional>
#include <span>
#include <vector>

namespace opaque {

/// Closed interval [lo, hi] on the real line. A point interval (lo == hi)
/// is allowed and has measure zero.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double measure() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals in canonical form: sorted,
/// pairwise separated by more than `kMergeTolerance`.
class IntervalSet {
 public:
  /// Intervals closer than this are merged into one.
  static constexpr double kMergeTolerance = 1e-12;

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet single(double lo, double hi);

  std::span<const Interval> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  double measure() const;
  std::optional<Interval> hull() const;

  bool contains(double t) const;
  /// True when [iv.lo, iv.hi] lies inside a single member interval.
  bool covers(const Interval& iv) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  /// Closure of this \ other.
  IntervalSet subtract(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace opaque
