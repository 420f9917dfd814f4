#include <algorithm>
#include <cmath>
#include <limits>

#include "opaque/barrier.hpp"
#include "opaque/barrier_io.hpp"
#include "opaque/lp.hpp"

namespace opaque {

namespace {

bool same_segment(const Segment& s, const Segment& t) {
  constexpr double tol = 1e-9;
  return (distance(s.a(), t.a()) <= tol && distance(s.b(), t.b()) <= tol) ||
         (distance(s.a(), t.b()) <= tol && distance(s.b(), t.a()) <= tol);
}

// Shortest classical barrier expressible with the family's segments.
double best_reference(const SegmentFamily& family) {
  const Barrier candidates[] = {make_steiner_barrier(), make_two_sides_barrier(),
                                make_boundary_barrier(ConvexPolygon::unit_triangle())};
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const Barrier& b : candidates) {
    const bool inside = std::all_of(b.segments().begin(), b.segments().end(), [&](const Segment& s) {
      return std::any_of(family.segments.begin(), family.segments.end(),
                         [&](const Segment& t) { return same_segment(s, t); });
    });
    if (inside && !(b.total_length() >= best)) best = b.total_length();
  }
  return best;
}

}  // namespace

std::vector<GapRow> integrality_gap_report(const std::vector<Angle>& angles,
                                           const std::vector<Resolution>& resolutions) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  std::vector<GapRow> out;
  for (const Resolution& res : resolutions) {
    SegmentFamily family = build_segment_family(FamilyMode::grid, {res.m, angles, 1.0});
    const double reference = best_reference(family);
    const LpInstance inst = build_instance(build_line_family(tri, res.k, res.h), std::move(family));
    const LpSolution sol = solve_lp(inst);
    out.push_back({res, inst.rows(), inst.cols(), sol.value, reference, reference / sol.value});
  }
  return out;
}

std::string gap_report_csv(const std::vector<GapRow>& rows) {
  std::string out = "resolution,rows,cols,lp_value,reference,gap_ratio\n";
  for (const GapRow& r : rows) {
    out += "k=" + std::to_string(r.resolution.k) + " h=" + format_real(r.resolution.h) +
           " m=" + std::to_string(r.resolution.m) + "," + std::to_string(r.rows) + "," +
           std::to_string(r.cols) + "," + format_real(r.lp_value) + "," + format_real(r.reference) +
           "," + format_real(r.gap_ratio) + "\n";
  }
  return out;
}

std::string instance_csv(const LpInstance& inst) {
  std::string out = "line,angle,offset,segments\n";
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    const Line& l = inst.lines.lines[r];
    out += std::to_string(r) + "," + format_real(l.normal.radians()) + "," + format_real(l.offset) + ",";
    for (std::size_t i = 0; i < inst.incidence[r].size(); ++i) {
      out += (i ? " " : "") + std::to_string(inst.incidence[r][i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace opaque
