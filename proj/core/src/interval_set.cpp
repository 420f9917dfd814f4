#include "opaque/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "opaque/error.hpp"

namespace opaque {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw DomainError("IntervalSet: interval bounds must be finite with lo <= hi");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi + kMergeTolerance) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
}

IntervalSet IntervalSet::single(double lo, double hi) {
  return IntervalSet({Interval{lo, hi}});
}

double IntervalSet::measure() const {
  double total = 0.0;
  for (const Interval& iv : intervals_) total += iv.measure();
  return total;
}

std::optional<Interval> IntervalSet::hull() const {
  if (intervals_.empty()) return std::nullopt;
  return Interval{intervals_.front().lo, intervals_.back().hi};
}

bool IntervalSet::contains(double t) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [t](const Interval& iv) { return iv.contains(t); });
}

bool IntervalSet::covers(const Interval& target) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return iv.lo <= target.lo && target.hi <= iv.hi;
  });
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all(intervals_);
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : intervals_) {
    double cursor = a.lo;
    bool open = true;
    for (const Interval& b : other.intervals_) {
      if (b.hi < cursor) continue;
      if (b.lo > a.hi) break;
      if (b.lo > cursor) out.push_back({cursor, b.lo});
      cursor = std::max(cursor, b.hi);
      if (cursor >= a.hi) {
        open = false;
        break;
      }
    }
    if (open && cursor < a.hi) out.push_back({cursor, a.hi});
    // A point interval removed by nothing survives as itself.
    if (open && a.lo == a.hi && cursor == a.lo && !other.contains(a.lo)) out.push_back(a);
  }
  return IntervalSet(std::move(out));
}

}  // namespace opaque
