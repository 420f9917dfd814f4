#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "opaque/barrier.hpp"
#include "opaque/error.hpp"

namespace opaque {

namespace {

double point_segment_distance(Point p, const Segment& s) {
  const Point d = s.b() - s.a();
  const double t = std::clamp(dot(p - s.a(), d) / dot(d, d), 0.0, 1.0);
  return distance(p, s.point_at(t));
}

double segment_distance(const Segment& s, const Segment& t) {
  const Point r = s.b() - s.a();
  const Point q = t.b() - t.a();
  const double o1 = cross(r, t.a() - s.a());
  const double o2 = cross(r, t.b() - s.a());
  const double o3 = cross(q, s.a() - t.a());
  const double o4 = cross(q, s.b() - t.a());
  if (((o1 < 0.0 && o2 > 0.0) || (o1 > 0.0 && o2 < 0.0)) &&
      ((o3 < 0.0 && o4 > 0.0) || (o3 > 0.0 && o4 < 0.0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(s.a(), t), point_segment_distance(s.b(), t),
                   point_segment_distance(t.a(), s), point_segment_distance(t.b(), s)});
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

bool contains_all_vertices(const Barrier& barrier, const ConvexPolygon& body, double tol) {
  return std::all_of(body.vertices().begin(), body.vertices().end(), [&](Point v) {
    return std::any_of(barrier.segments().begin(), barrier.segments().end(),
                       [&](const Segment& s) { return point_segment_distance(v, s) <= tol; });
  });
}

// Does the union of [lo + m, hi - m] cover [target.lo, target.hi]?
bool covers_with_margin(std::vector<Interval> parts, Interval target, double m) {
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double reach = target.lo;
  bool started = false;
  for (const Interval& iv : parts) {
    const double lo = iv.lo + m;
    const double hi = iv.hi - m;
    if (lo > hi) continue;
    if (lo > reach) return false;
    if (hi >= reach) {
      reach = hi;
      started = true;
    }
    if (started && reach >= target.hi) return true;
  }
  return started && reach >= target.hi;
}

// Largest m with covers_with_margin(parts, target, m), halved so that the
// result is a margin against simultaneous motion of all endpoints.
double robust_slack(const std::vector<Interval>& parts, Interval target) {
  double hi = 0.0;
  for (const Interval& iv : parts) hi = std::max(hi, iv.measure() / 2.0);
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (covers_with_margin(parts, target, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo / 2.0;
}

std::vector<double> sample_angles(const Barrier& barrier, const ConvexPolygon& body,
                                  int resolution) {
  std::vector<double> angles;
  for (int i = 0; i < resolution; ++i) angles.push_back(i * kPi / resolution);

  std::vector<Point> pts(body.vertices().begin(), body.vertices().end());
  for (const Segment& s : barrier.segments()) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point d = pts[j] - pts[i];
      angles.push_back(normalize_angle(std::atan2(d.y, d.x) + kPi / 2.0));
    }
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return angles;
}

}  // namespace

const char* to_string(CoverageStatus status) {
  switch (status) {
    case CoverageStatus::certified:
      return "CERTIFIED";
    case CoverageStatus::plausible:
      return "PLAUSIBLE";
    case CoverageStatus::refuted:
      return "REFUTED";
  }
  return "?";
}

bool is_connected(const Barrier& barrier, double tol) {
  const std::size_t n = barrier.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto segs = barrier.segments();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (segment_distance(segs[i], segs[j]) <= tol) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  const std::size_t root = find_root(parent, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (find_root(parent, i) != root) return false;
  }
  return true;
}

bool blocks(const Barrier& barrier, const Line& line, double tol) {
  return std::any_of(barrier.segments().begin(), barrier.segments().end(),
                     [&](const Segment& s) { return meets(s, line, tol); });
}

CoverageReport is_barrier(const Barrier& barrier, const ConvexPolygon& body, int resolution) {
  if (resolution < 8) throw DomainError("is_barrier: resolution must be at least 8");

  CoverageReport report;
  report.radius = body.radius();
  for (const Segment& s : barrier.segments()) {
    report.radius = std::max({report.radius, norm(s.a()), norm(s.b())});
  }

  const std::vector<double> angles = sample_angles(barrier, body, resolution);
  report.samples = angles.size();
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    report.max_spacing = std::max(report.max_spacing, angles[i + 1] - angles[i]);
  }
  report.max_spacing = std::max(report.max_spacing, kPi - angles.back() + angles.front());

  double worst_gap = 0.0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::vector<Interval> parts;
  for (double a : angles) {
    const Angle alpha(a);
    const Interval target = project_polygon(body, alpha);
    parts.clear();
    for (const Segment& s : barrier.segments()) {
      const double pa = project_point(s.a(), alpha);
      const double pb = project_point(s.b(), alpha);
      parts.push_back({std::min(pa, pb), std::max(pa, pb)});
    }
    const IntervalSet gaps = IntervalSet({target}).subtract(IntervalSet(parts));
    for (const Interval& g : gaps.intervals()) {
      if (g.measure() > worst_gap) {
        worst_gap = g.measure();
        report.witness_angle = alpha;
        report.witness_gap = g;
      }
    }
    if (worst_gap <= kGapTolerance) min_slack = std::min(min_slack, robust_slack(parts, target));
  }

  if (worst_gap > kGapTolerance) {
    report.status = CoverageStatus::refuted;
    report.min_slack = -worst_gap;
    return report;
  }
  report.witness_angle.reset();
  report.witness_gap.reset();
  report.min_slack = min_slack;

  if (is_connected(barrier) && contains_all_vertices(barrier, body, 1e-12)) {
    report.status = CoverageStatus::certified;
    report.method = CertificationMethod::connectivity;
  } else if (min_slack > 0.0 && report.max_spacing < min_slack / (2.0 * report.radius)) {
    report.status = CoverageStatus::certified;
    report.method = CertificationMethod::sampling;
  } else {
    report.status = CoverageStatus::plausible;
  }
  return report;
}

}  // namespace opaque
