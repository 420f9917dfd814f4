#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

/// A finite straight barrier: a multiset of segments.
class Barrier {
 public:
  Barrier() = default;
  explicit Barrier(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  std::span<const Segment> segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  double total_length() const;

  /// This barrier followed by the segments of `other`.
  Barrier concat(const Barrier& other) const;
  /// This barrier without the segment at `index`.
  Barrier without(std::size_t index) const;

 private:
  std::vector<Segment> segments_;
};

/// One edge per polygon side; total length equals the perimeter.
Barrier make_boundary_barrier(const ConvexPolygon& polygon);
/// Sides p1p3 and p2p3 of the unit triangle.
Barrier make_two_sides_barrier();
/// The three spokes from the Fermat point to the vertices of the unit
/// triangle (total length sqrt 3), in the order p1, p2, p3.
Barrier make_steiner_barrier();

// ---------------------------------------------------------------------------
// Angle classes and region mass
// ---------------------------------------------------------------------------

struct AngleClass {
  Angle representative;
  Barrier members;
};

/// Segments grouped by direction. Classes appear in order of first member.
struct AngleClassDecomposition {
  std::vector<AngleClass> classes;
  double tolerance = 0.0;

  double total_length() const;
  /// Class whose representative is within `tol` of `angle`, if any.
  const AngleClass* find(Angle angle, double tol = 1e-9) const;
};

/// Greedy clustering: each segment joins the first class whose representative
/// is within `tol` (circle metric on [0, pi)), else starts a new class.
AngleClassDecomposition decompose_by_angle(const Barrier& barrier, double tol);

/// Total length of the barrier inside `region`. When `class_filter` is
/// given, only segments within 1e-9 of one of those angles are counted.
double mass_in_region(const Barrier& barrier, const Region& region,
                      std::optional<std::span<const Angle>> class_filter = std::nullopt);

// ---------------------------------------------------------------------------
// Blocking verification
// ---------------------------------------------------------------------------

enum class CoverageStatus { certified, plausible, refuted };

enum class CertificationMethod { none, sampling, connectivity };

/// Outcome of checking the projection-cover condition U(alpha) within B(alpha).
struct CoverageReport {
  CoverageStatus status = CoverageStatus::plausible;
  CertificationMethod method = CertificationMethod::none;
  /// Present exactly when refuted: the sampled angle and the uncovered part
  /// of U(alpha) with the largest measure.
  std::optional<Angle> witness_angle;
  std::optional<Interval> witness_gap;
  /// Smallest robust cover margin over the samples (negative: gap measure).
  double min_slack = 0.0;
  std::size_t samples = 0;
  /// Largest spacing between consecutive sampled angles.
  double max_spacing = 0.0;
  /// Largest distance from the origin to an endpoint of B or a vertex of U.
  double radius = 0.0;
};

const char* to_string(CoverageStatus status);

/// Gaps narrower than this are treated as floating-point seams.
inline constexpr double kGapTolerance = 1e-9;

/// Samples `resolution` uniform angles plus all critical angles (where two
/// projected endpoints coincide). Refutes on any gap wider than
/// kGapTolerance. Certifies when the minimal slack m is positive and the
/// sample spacing is below m / (2R), since projected endpoints move
/// R-Lipschitz in alpha. A connected barrier containing every vertex of U
/// is certified directly. Throws DomainError for resolution < 8.
CoverageReport is_barrier(const Barrier& barrier, const ConvexPolygon& body, int resolution);

/// True when the segments form one connected set (closed incidence).
bool is_connected(const Barrier& barrier, double tol = 1e-12);

/// True when some segment of the barrier meets the line.
bool blocks(const Barrier& barrier, const Line& line, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Grid reductions
// ---------------------------------------------------------------------------

struct SegmentReduction {
  Barrier replacement;
  double length = 0.0;
};

/// Replaces `s` by a two-segment path on the chosen pi/3 grid that meets
/// every line meeting `s`. With u the nearest grid direction (oriented along
/// s) and v its normal, the corner q sits on the grid line through s.b()
/// and on the line at 60 degrees to it through s.a(); the length is
/// (cos phi + sin phi / sqrt 3) |s| with phi = fold_angle(s, grid).
/// Segments already on the grid come back unchanged.
SegmentReduction reduce_segment(const Segment& s, GridOffset grid);

/// reduce_segment applied to every segment.
Barrier reduce_barrier(const Barrier& barrier, GridOffset grid);

/// (C, D): segments with fold_angle(gamma, 0) <= beta, and the rest.
/// Throws DomainError unless 0 <= beta <= pi/6.
std::pair<Barrier, Barrier> split_by_fold(const Barrier& barrier, double beta);

}  // namespace opaque
