#include "opaque/geometry.hpp"

#include <algorithm>
#include <limits>

#include "opaque/error.hpp"

namespace opaque {

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) throw DomainError("angle must be finite");
  double r = std::fmod(radians, kPi);
  if (r < 0.0) r += kPi;
  // fmod of values just below a multiple of pi, or the += above, can round
  // up to pi itself.
  if (r >= kPi) r = 0.0;
  return r;
}

double angular_distance(Angle a, Angle b) {
  const double d = std::abs(a.radians() - b.radians());
  return std::min(d, kPi - d);
}

double grid_offset_radians(GridOffset grid) {
  return grid == GridOffset::zero ? 0.0 : kPi / 6.0;
}

std::vector<Angle> grid_angles(GridOffset grid) {
  const double g = grid_offset_radians(grid);
  return {Angle(g), Angle(g + kPi / 3.0), Angle(g + 2.0 * kPi / 3.0)};
}

double fold_angle(Angle gamma, GridOffset grid) {
  double best = std::numeric_limits<double>::infinity();
  for (Angle g : grid_angles(grid)) best = std::min(best, angular_distance(gamma, g));
  return best;
}

double fold_angle(Angle gamma, double grid_offset) {
  if (grid_offset == 0.0) return fold_angle(gamma, GridOffset::zero);
  if (std::abs(grid_offset - kPi / 6.0) <= 1e-15) return fold_angle(gamma, GridOffset::pi6);
  throw DomainError("fold_angle: grid offset must be 0 or pi/6");
}

Segment::Segment(Point a, Point b) : a_(a), b_(b) {
  if (!is_finite(a) || !is_finite(b)) throw DomainError("segment endpoints must be finite");
  if (a == b || !(distance(a, b) > 0.0)) throw DomainError("zero-length segment");
}

bool meets(const Segment& s, const Line& line, double tol) {
  const double pa = project_point(s.a(), line.normal);
  const double pb = project_point(s.b(), line.normal);
  return std::min(pa, pb) - tol <= line.offset && line.offset <= std::max(pa, pb) + tol;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw DomainError("polygon needs at least three vertices");
  for (Point p : vertices_) {
    if (!is_finite(p)) throw DomainError("polygon vertices must be finite");
  }
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(vertices_[i], vertices_[(i + 1) % n]);
  if (twice_area < 0.0) std::reverse(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices_[(i + 1) % n] - vertices_[i];
    const Point e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (!(cross(e0, e1) > 0.0)) throw DomainError("polygon is not strictly convex");
  }
}

ConvexPolygon ConvexPolygon::unit_triangle() {
  return ConvexPolygon({points::p1, points::p2, points::p3});
}

ConvexPolygon ConvexPolygon::unit_square() {
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

ConvexPolygon ConvexPolygon::regular_hexagon(double side) {
  std::vector<Point> v;
  for (int k = 0; k < 6; ++k) {
    const double t = k * kPi / 3.0;
    v.push_back({side * std::cos(t), side * std::sin(t)});
  }
  return ConvexPolygon(std::move(v));
}

std::vector<Segment> ConvexPolygon::edges() const {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return out;
}

double ConvexPolygon::perimeter() const {
  double total = 0.0;
  for (const Segment& e : edges()) total += e.length();
  return total;
}

double ConvexPolygon::radius() const {
  double r = 0.0;
  for (Point p : vertices_) r = std::max(r, norm(p));
  return r;
}

double project_point(Point p, Angle alpha) {
  return p.x * std::cos(alpha.radians()) + p.y * std::sin(alpha.radians());
}

IntervalSet project_segment(const Segment& s, Angle alpha) {
  const double pa = project_point(s.a(), alpha);
  const double pb = project_point(s.b(), alpha);
  return IntervalSet::single(std::min(pa, pb), std::max(pa, pb));
}

IntervalSet project_segments(std::span<const Segment> segments, Angle alpha) {
  std::vector<Interval> parts;
  parts.reserve(segments.size());
  for (const Segment& s : segments) {
    const double pa = project_point(s.a(), alpha);
    const double pb = project_point(s.b(), alpha);
    parts.push_back({std::min(pa, pb), std::max(pa, pb)});
  }
  return IntervalSet(std::move(parts));
}

Interval project_polygon(const ConvexPolygon& polygon, Angle alpha) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Point v : polygon.vertices()) {
    const double t = project_point(v, alpha);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

double polygon_width(const ConvexPolygon& polygon, Angle alpha) {
  return project_polygon(polygon, alpha).measure();
}

double triangle_width(double alpha) {
  const double period = kPi / 3.0;
  double t = std::fmod(alpha, period);
  if (t < 0.0) t += period;
  return std::cos(std::min(t, period - t));
}

std::vector<double> width_kinks(const ConvexPolygon& polygon) {
  std::vector<double> kinks;
  for (const Segment& e : polygon.edges()) {
    kinks.push_back(normalize_angle(e.angle().radians() + kPi / 2.0));
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              kinks.end());
  return kinks;
}

HalfPlane::HalfPlane(Point boundary_point, Angle boundary_angle, Side side)
    : point_(boundary_point), angle_(boundary_angle), side_(side) {
  if (!is_finite(boundary_point)) throw DomainError("half-plane boundary point must be finite");
}

double HalfPlane::signed_distance(Point p) const {
  const double c = cross(angle_.direction(), p - point_);
  return side_ == Side::left ? c : -c;
}

bool Region::contains(Point p) const {
  if (!slab_.contains(p)) return false;
  return std::none_of(excluded_.begin(), excluded_.end(),
                      [p](const HalfPlane& h) { return h.contains(p); });
}

namespace {

// Parameter range t in [0, 1] of s that lies inside `region`.
IntervalSet clip_parameters(const Segment& s, const Region& region) {
  const Slab& slab = region.slab();
  const double fa = project_point(s.a(), slab.angle());
  const double fb = project_point(s.b(), slab.angle());
  const Interval iv = slab.interval();

  double t0 = 0.0;
  double t1 = 1.0;
  if (fb != fa) {
    double ta = (iv.lo - fa) / (fb - fa);
    double tb = (iv.hi - fa) / (fb - fa);
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  } else if (!iv.contains(fa)) {
    return {};
  }
  if (t0 > t1) return {};

  IntervalSet inside = IntervalSet::single(t0, t1);
  for (const HalfPlane& h : region.excluded()) {
    const double ga = h.signed_distance(s.a());
    const double gb = h.signed_distance(s.b());
    // {t : ga + t (gb - ga) >= 0} intersected with [0, 1]
    Interval removed{0.0, 1.0};
    if (gb != ga) {
      const double root = ga / (ga - gb);
      if (gb > ga) {
        removed.lo = std::clamp(root, 0.0, 1.0);
      } else {
        removed.hi = std::clamp(root, 0.0, 1.0);
      }
      if ((gb > ga && root > 1.0) || (gb < ga && root < 0.0)) continue;
    } else if (ga < 0.0) {
      continue;
    }
    inside = inside.subtract(IntervalSet({removed}));
    if (inside.empty()) break;
  }
  return inside;
}

}  // namespace

std::vector<Segment> region_clip(const Segment& s, const Region& region) {
  std::vector<Segment> out;
  const IntervalSet params = clip_parameters(s, region);
  for (const Interval& iv : params.intervals()) {
    const Point a = s.point_at(iv.lo);
    const Point b = s.point_at(iv.hi);
    if (iv.hi > iv.lo && a != b) out.emplace_back(a, b);
  }
  return out;
}

double clipped_length(const Segment& s, const Region& region) {
  return clip_parameters(s, region).measure() * s.length();
}

namespace zones {

HalfPlane p1_half_plane() { return HalfPlane(points::p2, Angle(kPi / 2.0), Side::right); }
HalfPlane p2_half_plane() { return HalfPlane(points::p2, Angle(kPi / 6.0), Side::right); }
HalfPlane p3_half_plane() { return HalfPlane(points::p1, Angle(kPi / 2.0), Side::left); }
HalfPlane p4_half_plane() { return HalfPlane(points::p2, Angle(0.0), Side::right); }

ConvexPolygon right_corner_triangle() {
  return ConvexPolygon({points::q1, points::p2, points::q2});
}

ConvexPolygon left_corner_triangle() {
  return ConvexPolygon({points::p1, points::q3, points::q4});
}

Region x1() {
  const Angle at(5.0 * kPi / 6.0);
  return Region(Slab(at, project_polygon(right_corner_triangle(), at)),
                {p1_half_plane(), p2_half_plane()});
}

Region x2() {
  const Angle at(kPi / 3.0);
  return Region(Slab(at, project_polygon(left_corner_triangle(), at)),
                {p3_half_plane(), p4_half_plane()});
}

}  // namespace zones

}  // namespace opaque
