#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// Lines meeting U: k normal angles i pi / k and, per angle, offsets
/// lo + h/2 + j h up to the far end of U's projection [lo, hi].
/// Refining (k, h) to (3k, h/3) keeps every old line.
struct LineFamily {
  std::vector<Line> lines;
  int k = 0;
  double h = 0.0;
};

/// Throws DomainError unless k >= 3 and h > 0.
LineFamily build_line_family(const ConvexPolygon& body, int k, double h);

struct SegmentFamily {
  std::vector<Segment> segments;
  std::vector<double> costs;
};

enum class FamilyMode { boundary_edges, steiner_spokes, grid };

struct GridParams {
  /// Lattice pitch is 1 / m.
  int m = 6;
  /// Chord directions; empty means every direction spanned by two lattice
  /// nodes.
  std::vector<Angle> angles;
  /// Longest node-to-node sub-segment kept.
  double length_cap = 1.0;
};

inline constexpr std::size_t kMaxFamilySize = 100000;

/// Candidate segments inside the unit triangle. In grid mode: the maximal
/// chords along each direction through each node of the triangular lattice
/// of pitch 1/m, and every sub-segment between nodes (or chord ends) of
/// length <= cap, deduplicated. If the directions include pi/6, pi/2 and
/// 5pi/6 the Steiner spokes are appended. Throws DomainError beyond
/// kMaxFamilySize segments.
SegmentFamily build_segment_family(FamilyMode mode, const GridParams& params = {});

std::vector<Angle> steiner_angles();

/// Covering program  min c^T x  s.t.  M x >= 1, x >= 0, with one row per
/// line and one column per segment. incidence[r] lists the columns meeting
/// line r, ascending.
struct LpInstance {
  LineFamily lines;
  SegmentFamily family;
  std::vector<std::vector<std::size_t>> incidence;

  std::size_t rows() const { return incidence.size(); }
  std::size_t cols() const { return family.segments.size(); }
  std::size_t nonzeros() const;
};

LpInstance build_instance(LineFamily lines, SegmentFamily family);

// ---------------------------------------------------------------------------
// Solving
// ---------------------------------------------------------------------------

struct LpSolution {
  std::vector<double> x;  // per segment
  std::vector<double> y;  // per line
  double value = 0.0;     // c^T x
  double dual_value = 0.0;  // 1^T y
  std::size_t iterations = 0;
};

/// Exact LP optimum by revised simplex with Bland's rule on the packing
/// dual  max 1^T y  s.t.  M^T y <= c, y >= 0. Throws DomainError naming
/// the first line that no segment meets.
LpSolution solve_lp(const LpInstance& instance);

/// For every segment: sum of y over the lines meeting it <= cost + 1e-9.
/// Throws DomainError on a size mismatch or a negative entry.
bool check_dual_feasible(const LpInstance& instance, const std::vector<double>& y);

/// Largest violation of M x >= 1 and x >= 0 (zero when feasible).
double primal_violation(const LpInstance& instance, const std::vector<double>& x);

/// Discretised Jones dual: y = (h pi / k) / 2 on every line. It is exact
/// only in the limit; at finite (k, h) some segments are overloaded by the
/// Riemann-sum error.
std::vector<double> uniform_jones_dual(const LineFamily& lines);

/// Largest ratio (sum of y over lines meeting s) / cost(s).
double worst_dual_load(const LpInstance& instance, const std::vector<double>& y);

/// The uniform Jones dual divided by max(1, worst_dual_load), so that it
/// is feasible for this instance.
std::vector<double> scaled_uniform_dual(const LpInstance& instance);

// ---------------------------------------------------------------------------
// Integrality gap experiments
// ---------------------------------------------------------------------------

struct Resolution {
  int k = 12;
  double h = 0.1;
  int m = 6;
};

struct GapRow {
  Resolution resolution;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double lp_value = 0.0;
  /// Shortest known barrier whose segments all belong to the family (NaN
  /// when none does).
  double reference = 0.0;
  double gap_ratio = 0.0;
};

std::vector<GapRow> integrality_gap_report(const std::vector<Angle>& angles,
                                           const std::vector<Resolution>& resolutions);

/// resolution,rows,cols,lp_value,reference,gap_ratio
std::string gap_report_csv(const std::vector<GapRow>& rows);

/// One row per line: line,angle,offset,segments (space separated).
std::string instance_csv(const LpInstance& instance);

}  // namespace opaque
