#include <algorithm>
#include <cmath>

#include "opaque/barrier.hpp"

namespace opaque {

namespace {

// Directions this close to the grid are left alone; the length law error
// this introduces is below phi / sqrt 3 per unit length.
constexpr double kOnGrid = 1e-13;

// Grid angle nearest to `gamma` (circle metric on [0, pi)). Near-ties, as
// for a segment exactly halfway between two grid lines, go to the smaller
// grid angle.
Angle nearest_grid_angle(Angle gamma, GridOffset grid) {
  Angle best;
  double best_distance = kPi;
  for (Angle g : grid_angles(grid)) {
    const double d = angular_distance(gamma, g);
    if (d < best_distance - 1e-12) {
      best = g;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace

SegmentReduction reduce_segment(const Segment& s, GridOffset grid) {
  const double phi = fold_angle(s.angle(), grid);
  if (phi <= kOnGrid) return {Barrier({s}), s.length()};

  // Rotated frame: u along the nearest grid direction, v its left normal.
  const Point u = nearest_grid_angle(s.angle(), grid).direction();
  const Point v{-u.y, u.x};

  Point start = s.a();
  Point end = s.b();
  if (dot(end - start, u) < 0.0) std::swap(start, end);
  const Point d = end - start;
  const double rise = dot(d, v);

  // The 60-degree line from `start` reaches the grid line through `end`
  // after |rise| / sqrt 3 along u.
  const Point corner = start + (std::abs(rise) / kSqrt3) * u + rise * v;
  if (corner == start || corner == end) return {Barrier({s}), s.length()};

  Barrier path({Segment(start, corner), Segment(corner, end)});
  const double length = path.total_length();
  return {std::move(path), length};
}

Barrier reduce_barrier(const Barrier& barrier, GridOffset grid) {
  std::vector<Segment> out;
  out.reserve(2 * barrier.size());
  for (const Segment& s : barrier.segments()) {
    const SegmentReduction r = reduce_segment(s, grid);
    out.insert(out.end(), r.replacement.segments().begin(), r.replacement.segments().end());
  }
  return Barrier(std::move(out));
}

}  // namespace opaque
