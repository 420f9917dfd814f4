#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "opaque/barrier.hpp"
#include "opaque/error.hpp"
#include "opaque/lp.hpp"

namespace opaque {

LineFamily build_line_family(const ConvexPolygon& body, int k, double h) {
  if (k < 3) throw DomainError("line family: k must be at least 3");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("line family: pitch h must be positive");
  LineFamily family;
  family.k = k;
  family.h = h;
  for (int i = 0; i < k; ++i) {
    const Angle normal(kPi * i / k);
    const Interval span = project_polygon(body, normal);
    const auto count = static_cast<long>(std::floor(span.measure() / h + 0.5));
    for (long j = 0; j < count; ++j) {
      family.lines.push_back({normal, span.lo + (static_cast<double>(j) + 0.5) * h});
    }
  }
  return family;
}

std::vector<Angle> steiner_angles() {
  return {Angle(kPi / 6.0), Angle(kPi / 2.0), Angle(5.0 * kPi / 6.0)};
}

namespace {

using Key = std::tuple<long long, long long, long long, long long>;

long long snap(double v) { return std::llround(v * 1e9); }

// Orientation-free key with endpoints snapped to 1e-9.
Key segment_key(Point a, Point b) {
  if (std::make_pair(snap(b.x), snap(b.y)) < std::make_pair(snap(a.x), snap(a.y))) std::swap(a, b);
  return {snap(a.x), snap(a.y), snap(b.x), snap(b.y)};
}

class FamilyBuilder {
 public:
  void add(Point a, Point b) {
    if (distance(a, b) <= 1e-12) return;
    if (!seen_.insert(segment_key(a, b)).second) return;
    if (out_.segments.size() >= kMaxFamilySize) {
      throw DomainError("segment family exceeds " + std::to_string(kMaxFamilySize) + " segments");
    }
    out_.segments.emplace_back(a, b);
    out_.costs.push_back(out_.segments.back().length());
  }
  SegmentFamily take() { return std::move(out_); }

 private:
  std::set<Key> seen_;
  SegmentFamily out_;
};

std::vector<Point> lattice_nodes(int m) {
  std::vector<Point> nodes;
  for (int j = 0; j <= m; ++j) {
    for (int i = 0; i + j <= m; ++i) {
      nodes.push_back({(i + 0.5 * j) / m, j * kSqrt3 / (2.0 * m)});
    }
  }
  return nodes;
}

// Parameter range of {p + t d} inside the triangle, if it has positive length.
std::optional<std::pair<double, double>> chord_range(const ConvexPolygon& tri, Point p, Point d) {
  double lo = -1e300;
  double hi = 1e300;
  const auto v = tri.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point e = v[(i + 1) % v.size()] - v[i];
    const double base = cross(e, p - v[i]);  // >= 0 inside
    const double rate = cross(e, d);
    if (std::abs(rate) < 1e-15) {
      if (base < -1e-12) return std::nullopt;
      continue;
    }
    const double t = -base / rate;
    if (rate > 0.0) {
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
  }
  if (hi - lo <= 1e-12) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<Angle> node_pair_directions(const std::vector<Point>& nodes) {
  std::vector<Angle> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Point d = nodes[j] - nodes[i];
      const Angle a(std::atan2(d.y, d.x));
      const bool known = std::any_of(out.begin(), out.end(),
                                     [&](Angle b) { return angular_distance(a, b) <= 1e-12; });
      if (!known) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), [](Angle a, Angle b) { return a.radians() < b.radians(); });
  return out;
}

bool contains_angle(const std::vector<Angle>& angles, Angle a) {
  return std::any_of(angles.begin(), angles.end(),
                     [&](Angle b) { return angular_distance(a, b) <= 1e-9; });
}

}  // namespace

SegmentFamily build_segment_family(FamilyMode mode, const GridParams& params) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  FamilyBuilder builder;
  if (mode == FamilyMode::boundary_edges) {
    for (const Segment& e : tri.edges()) builder.add(e.a(), e.b());
    return builder.take();
  }
  if (mode == FamilyMode::steiner_spokes) {
    const Barrier spokes = make_steiner_barrier();
    for (const Segment& s : spokes.segments()) builder.add(s.a(), s.b());
    return builder.take();
  }

  if (params.m < 1) throw DomainError("grid family: m must be at least 1");
  if (!(params.length_cap > 0.0)) throw DomainError("grid family: length cap must be positive");
  const std::vector<Point> nodes = lattice_nodes(params.m);
  const std::vector<Angle> angles = params.angles.empty() ? node_pair_directions(nodes) : params.angles;

  std::set<Key> chords;
  for (Angle a : angles) {
    const Point d = a.direction();
    for (Point p : nodes) {
      const auto range = chord_range(tri, p, d);
      if (!range) continue;
      const Point from = p + range->first * d;
      const Point to = p + range->second * d;
      if (!chords.insert(segment_key(from, to)).second) continue;

      // Nodes on this chord plus its two ends, ordered along d.
      std::vector<double> ts{range->first, range->second};
      for (Point q : nodes) {
        if (std::abs(cross(d, q - p)) > 1e-12) continue;
        const double t = dot(q - p, d);
        if (t > range->first + 1e-12 && t < range->second - 1e-12) ts.push_back(t);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end(), [](double x, double y) { return y - x <= 1e-12; }),
               ts.end());
      for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
          if (ts[j] - ts[i] > params.length_cap + 1e-12) break;
          builder.add(p + ts[i] * d, p + ts[j] * d);
        }
      }
    }
  }

  const std::vector<Angle> steiner = steiner_angles();
  if (std::all_of(steiner.begin(), steiner.end(), [&](Angle a) { return contains_angle(angles, a); })) {
    const Barrier spokes = make_steiner_barrier();
    for (const Segment& s : spokes.segments()) builder.add(s.a(), s.b());
  }
  return builder.take();
}

std::size_t LpInstance::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : incidence) total += row.size();
  return total;
}

LpInstance build_instance(LineFamily lines, SegmentFamily family) {
  LpInstance inst{std::move(lines), std::move(family), {}};
  inst.incidence.resize(inst.lines.lines.size());
  for (std::size_t r = 0; r < inst.lines.lines.size(); ++r) {
    const Line& line = inst.lines.lines[r];
    for (std::size_t c = 0; c < inst.family.segments.size(); ++c) {
      if (meets(inst.family.segments[c], line)) inst.incidence[r].push_back(c);
    }
  }
  return inst;
}

std::vector<double> uniform_jones_dual(const LineFamily& lines) {
  return std::vector<double>(lines.lines.size(), lines.h * kPi / lines.k / 2.0);
}

double worst_dual_load(const LpInstance& inst, const std::vector<double>& y) {
  if (y.size() != inst.rows()) throw DomainError("dual vector size does not match the line count");
  std::vector<double> load(inst.cols(), 0.0);
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    for (std::size_t c : inst.incidence[r]) load[c] += y[r];
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < inst.cols(); ++c) worst = std::max(worst, load[c] / inst.family.costs[c]);
  return worst;
}

std::vector<double> scaled_uniform_dual(const LpInstance& inst) {
  std::vector<double> y = uniform_jones_dual(inst.lines);
  const double worst = worst_dual_load(inst, y);
  if (worst > 1.0) {
    for (double& v : y) v /= worst;
  }
  return y;
}

bool check_dual_feasible(const LpInstance& inst, const std::vector<double>& y) {
  if (y.size() != inst.rows()) throw DomainError("dual vector size does not match the line count");
  std::vector<double> load(inst.cols(), 0.0);
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    if (y[r] < 0.0) throw DomainError("dual vector has a negative entry");
    for (std::size_t c : inst.incidence[r]) load[c] += y[r];
  }
  for (std::size_t c = 0; c < inst.cols(); ++c) {
    if (load[c] > inst.family.costs[c] + 1e-9) return false;
  }
  return true;
}

double primal_violation(const LpInstance& inst, const std::vector<double>& x) {
  if (x.size() != inst.cols()) throw DomainError("primal vector size does not match the segment count");
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const auto& row : inst.incidence) {
    double cover = 0.0;
    for (std::size_t c : row) cover += x[c];
    worst = std::max(worst, 1.0 - cover);
  }
  return worst;
}

}  // namespace opaque
