#pragma once

#include <random>

#include "opaque/geometry.hpp"

namespace opaque::test {

inline Point random_point(std::mt19937_64& rng, double lo = -1.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng)};
}

inline Segment random_segment(std::mt19937_64& rng) {
  for (;;) {
    const Point a = random_point(rng);
    const Point b = random_point(rng);
    if (distance(a, b) > 1e-3) return Segment(a, b);
  }
}

// A line through a uniformly chosen point of s, at a uniform normal angle.
inline Line random_line_through(const Segment& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Point p = s.point_at(u(rng));
  const Angle normal(kPi * u(rng));
  return {normal, project_point(p, normal)};
}

}  // namespace opaque::test
