#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "opaque/interval_set.hpp"

namespace opaque {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// Planar point; the unit of length is the side of the unit triangle.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Named points of the unit equilateral triangle p1 p2 p3 and the corner
/// construction points q1..q4 used by the corner zones.
namespace points {
inline constexpr Point p1{0.0, 0.0};
inline constexpr Point p2{1.0, 0.0};
inline constexpr Point p3{0.5, kSqrt3 / 2.0};
inline constexpr Point q1{13.0 / 14.0, 0.0};
inline constexpr Point q2{27.0 / 28.0, kSqrt3 / 28.0};
inline constexpr Point q3{4.0 / 7.0, 0.0};
inline constexpr Point q4{1.0 / 14.0, kSqrt3 / 7.0};
/// Fermat (Steiner) point of the unit triangle.
inline constexpr Point fermat{0.5, 0.5 / kSqrt3};
}  // namespace points

// ---------------------------------------------------------------------------
// Angles
// ---------------------------------------------------------------------------

/// Maps any real angle into [0, pi).
double normalize_angle(double radians);

/// Undirected angle, stored normalized into [0, pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize_angle(radians)) {}

  double radians() const { return value_; }
  Point direction() const { return {std::cos(value_), std::sin(value_)}; }

  friend bool operator==(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

/// Distance between two undirected angles on the circle of circumference pi;
/// the result lies in [0, pi/2].
double angular_distance(Angle a, Angle b);

/// The two pi/3-spaced angle grids used by the reductions: {0, pi/3, 2pi/3}
/// and {pi/6, pi/2, 5pi/6}.
enum class GridOffset { zero, pi6 };

double grid_offset_radians(GridOffset grid);
/// The three grid angles, ascending.
std::vector<Angle> grid_angles(GridOffset grid);

/// Distance from `gamma` to the nearest angle of the chosen grid; in [0, pi/6].
double fold_angle(Angle gamma, GridOffset grid);
/// Same, for a raw offset which must be 0 or pi/6.
double fold_angle(Angle gamma, double grid_offset);

// ---------------------------------------------------------------------------
// Segments and lines
// ---------------------------------------------------------------------------

/// Non-degenerate closed segment. Construction throws DomainError for
/// non-finite or coincident endpoints.
class Segment {
 public:
  Segment(Point a, Point b);

  Point a() const { return a_; }
  Point b() const { return b_; }
  double length() const { return distance(a_, b_); }
  Angle angle() const { return Angle(std::atan2(b_.y - a_.y, b_.x - a_.x)); }
  Point point_at(double t) const { return a_ + t * (b_ - a_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

/// The line {p : project_point(p, normal) == offset}. Its direction is
/// normal + pi/2.
struct Line {
  Angle normal;
  double offset = 0.0;
};

/// Closed segment/line incidence; `tol` is in projection units.
bool meets(const Segment& s, const Line& line, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Convex polygons
// ---------------------------------------------------------------------------

/// Strictly convex polygon with at least three vertices. The constructor
/// accepts either orientation and stores the vertices counter-clockwise.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  static ConvexPolygon unit_triangle();
  static ConvexPolygon unit_square();
  static ConvexPolygon regular_hexagon(double side = 1.0);

  std::span<const Point> vertices() const { return vertices_; }
  std::vector<Segment> edges() const;
  double perimeter() const;
  /// Largest distance from the origin to a vertex.
  double radius() const;

 private:
  std::vector<Point> vertices_;
};

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

/// x cos(alpha) + y sin(alpha).
double project_point(Point p, Angle alpha);
IntervalSet project_segment(const Segment& s, Angle alpha);
IntervalSet project_segments(std::span<const Segment> segments, Angle alpha);
Interval project_polygon(const ConvexPolygon& polygon, Angle alpha);

/// Measure of the polygon's projection: its width in direction alpha.
double polygon_width(const ConvexPolygon& polygon, Angle alpha);

/// Closed form of the unit triangle's width: cos of the distance from alpha
/// to the nearest multiple of pi/3. Accepts any real alpha.
double triangle_width(double alpha);

/// Angles in [0, pi) at which the polygon's width function has a kink
/// (an edge is orthogonal to the projection direction), ascending.
std::vector<double> width_kinks(const ConvexPolygon& polygon);

// ---------------------------------------------------------------------------
// Half-planes, slabs, regions
// ---------------------------------------------------------------------------

enum class Side { left, right };

/// Closed half-plane on one side of the line through `boundary_point` with
/// direction `boundary_angle` (pointing into the upper half-plane, or along
/// +x for angle 0). `left` is counter-clockwise of that direction.
class HalfPlane {
 public:
  static constexpr double kBoundaryTolerance = 1e-12;

  HalfPlane(Point boundary_point, Angle boundary_angle, Side side);

  Point boundary_point() const { return point_; }
  Angle boundary_angle() const { return angle_; }
  Side side() const { return side_; }

  /// Positive inside, negative outside, zero on the boundary line.
  double signed_distance(Point p) const;
  bool contains(Point p) const { return signed_distance(p) >= -kBoundaryTolerance; }

 private:
  Point point_;
  Angle angle_;
  Side side_;
};

/// Points whose projection at `angle` falls into `interval`.
class Slab {
 public:
  Slab(Angle angle, Interval interval) : angle_(angle), interval_(interval) {}

  Angle angle() const { return angle_; }
  Interval interval() const { return interval_; }
  bool contains(Point p) const { return interval_.contains(project_point(p, angle_)); }

 private:
  Angle angle_;
  Interval interval_;
};

/// A slab with some closed half-planes removed.
class Region {
 public:
  explicit Region(Slab slab, std::vector<HalfPlane> excluded = {})
      : slab_(slab), excluded_(std::move(excluded)) {}

  const Slab& slab() const { return slab_; }
  std::span<const HalfPlane> excluded() const { return excluded_; }
  bool contains(Point p) const;

 private:
  Slab slab_;
  std::vector<HalfPlane> excluded_;
};

/// Portion of `s` inside `region`, as sub-segments ordered from s.a() to
/// s.b(). Pieces of zero length are dropped.
std::vector<Segment> region_clip(const Segment& s, const Region& region);

/// Length of region_clip(s, region) without materialising the pieces.
double clipped_length(const Segment& s, const Region& region);

// ---------------------------------------------------------------------------
// Corner zones of the unit triangle
// ---------------------------------------------------------------------------

namespace zones {
/// Right half-plane of the vertical line through p2.
HalfPlane p1_half_plane();
/// Lower half-plane of the pi/6 line through p2.
HalfPlane p2_half_plane();
/// Left half-plane of the vertical line through p1.
HalfPlane p3_half_plane();
/// Lower half-plane of the horizontal line through p2.
HalfPlane p4_half_plane();

/// Triangle q1 q2 p2 at the right corner.
ConvexPolygon right_corner_triangle();
/// Triangle p1 q3 q4 at the left corner.
ConvexPolygon left_corner_triangle();

/// X1: slab over the right corner triangle at 5pi/6 minus P1 and P2.
Region x1();
/// X2: slab over the left corner triangle at pi/3 minus P3 and P4.
Region x2();
}  // namespace zones

}  // namespace opaque
