#include "opaque/barrier.hpp"

#include <algorithm>

#include "opaque/error.hpp"

namespace opaque {

double Barrier::total_length() const {
  double total = 0.0;
  for (const Segment& s : segments_) total += s.length();
  return total;
}

Barrier Barrier::concat(const Barrier& other) const {
  std::vector<Segment> all(segments_);
  all.insert(all.end(), other.segments_.begin(), other.segments_.end());
  return Barrier(std::move(all));
}

Barrier Barrier::without(std::size_t index) const {
  if (index >= segments_.size()) throw DomainError("Barrier::without: index out of range");
  std::vector<Segment> rest(segments_);
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return Barrier(std::move(rest));
}

Barrier make_boundary_barrier(const ConvexPolygon& polygon) { return Barrier(polygon.edges()); }

Barrier make_two_sides_barrier() {
  return Barrier({Segment(points::p1, points::p3), Segment(points::p2, points::p3)});
}

Barrier make_steiner_barrier() {
  return Barrier({Segment(points::fermat, points::p1), Segment(points::fermat, points::p2),
                  Segment(points::fermat, points::p3)});
}

double AngleClassDecomposition::total_length() const {
  double total = 0.0;
  for (const AngleClass& c : classes) total += c.members.total_length();
  return total;
}

const AngleClass* AngleClassDecomposition::find(Angle angle, double tol) const {
  for (const AngleClass& c : classes) {
    if (angular_distance(c.representative, angle) <= tol) return &c;
  }
  return nullptr;
}

AngleClassDecomposition decompose_by_angle(const Barrier& barrier, double tol) {
  if (!(tol >= 0.0)) throw DomainError("decompose_by_angle: tolerance must be >= 0");
  std::vector<Angle> reps;
  std::vector<std::vector<Segment>> members;
  for (const Segment& s : barrier.segments()) {
    const Angle a = s.angle();
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](Angle r) { return angular_distance(r, a) <= tol; });
    if (it == reps.end()) {
      reps.push_back(a);
      members.push_back({s});
    } else {
      members[static_cast<std::size_t>(it - reps.begin())].push_back(s);
    }
  }
  AngleClassDecomposition out;
  out.tolerance = tol;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.classes.push_back({reps[i], Barrier(std::move(members[i]))});
  }
  return out;
}

double mass_in_region(const Barrier& barrier, const Region& region,
                      std::optional<std::span<const Angle>> class_filter) {
  constexpr double kClassTolerance = 1e-9;
  double total = 0.0;
  for (const Segment& s : barrier.segments()) {
    if (class_filter) {
      const Angle a = s.angle();
      const bool wanted = std::any_of(class_filter->begin(), class_filter->end(), [&](Angle c) {
        return angular_distance(a, c) <= kClassTolerance;
      });
      if (!wanted) continue;
    }
    total += clipped_length(s, region);
  }
  return total;
}

std::pair<Barrier, Barrier> split_by_fold(const Barrier& barrier, double beta) {
  if (!(beta >= 0.0 && beta <= kPi / 6.0)) {
    throw DomainError("split_by_fold: beta must lie in [0, pi/6]");
  }
  std::vector<Segment> close;
  std::vector<Segment> far;
  for (const Segment& s : barrier.segments()) {
    (fold_angle(s.angle(), GridOffset::zero) <= beta ? close : far).push_back(s);
  }
  return {Barrier(std::move(close)), Barrier(std::move(far))};
}

}  // namespace opaque
