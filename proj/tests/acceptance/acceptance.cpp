// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "opaque/barrier.hpp"
#include "opaque/bounds.hpp"
#include "opaque/final_bound.hpp"
#include "opaque/inequality_chain.hpp"
#include "opaque/lp.hpp"
#include "opaque/overlap.hpp"

using namespace opaque;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool run_criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < limit_s, "runtime " + num(secs) + " s over " + num(limit_s) + " s");
  std::printf("%s criterion %d: %s (%.3f s) %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

void jones(Outcome& o) {
  const BoundCertificate tri = jones_bound(ConvexPolygon::unit_triangle());
  const BoundCertificate sq = jones_bound(ConvexPolygon::unit_square());
  o.require(std::abs(tri.value - 1.5) <= 1e-9, "triangle value");
  o.require(std::abs(sq.value - 2.0) <= 1e-9, "square value");
  o.require(std::abs(tri.parameters.at("cauchy_integral") - 3.0) <= 1e-6, "triangle cauchy integral");
  o.require(std::abs(sq.parameters.at("cauchy_integral") - 4.0) <= 1e-6, "square cauchy integral");
  o.note("triangle " + num(tri.value) + ", square " + num(sq.value));
}

void restricted_bound(Outcome& o) {
  o.require(std::abs(weighted_ratio_closed_form(0) - 1.5) <= 1e-9, "ratio at c = 0");
  const double r2 = weighted_ratio_closed_form(1e2);
  const double r3 = weighted_ratio_closed_form(1e3);
  const double r4 = weighted_ratio_closed_form(1e4);
  o.require(r2 < r3 && r3 < r4, "strict increase over c = 1e2, 1e3, 1e4");
  o.require(std::abs(r4 - kSqrt3) <= 1e-3, "ratio at c = 1e4 near sqrt 3");
  double worst = 0.0;
  for (double c : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const double q = weighted_ratio(WeightFunction::exponential(c), RatioMethod::quadrature);
    worst = std::max(worst, std::abs(q - weighted_ratio_closed_form(c)));
  }
  o.require(worst <= 1e-9, "closed form vs quadrature");
  o.note("ratio(1e4) = " + num(r4) + ", max |closed - quadrature| = " + num(worst));
}

void corner_root(Outcome& o) {
  const double d = restricted3_delta();
  o.require(std::abs(d - 1.0865e-4) <= 1e-8, "delta");
  o.require(std::abs(1.5 + d - 1.50010865) <= 1e-8, "certificate value");
  o.require(std::abs(restricted3_residual(d)) <= 1e-14, "residual");
  o.note("delta = " + num(d) + ", residual = " + num(restricted3_residual(d)));
}

void final_theorem(Outcome& o) {
  const double beta = std::pow(10.0, -4.1), eps = std::pow(10.0, -3.9);
  const double l3 = 1.5 + restricted3_delta();
  const double e = final_bound_excess(beta, eps, l3);
  o.require(e >= 5e-13 && e <= 1e-12, "reference-point excess in [5e-13, 1e-12]");
  const FinalBoundOptimum opt = optimize_final_bound(l3);
  o.require(opt.excess >= e, "optimum at least the reference point");
  o.note("excess = " + num(e) + ", optimised = " + num(opt.excess));
}

void chain_replay(Outcome& o) {
  const ChainSum right = replay_chain(chains::right_corner());
  const FactoredSum rf = factor_total_length(right, chains::kClasses);
  o.require(right.constant == Rational(85, 14), "right corner constant");
  o.require(rf.total_length_coefficient == Rational(4), "right corner coefficient");
  const ChainSum left = replay_chain(chains::left_corner());
  const FactoredSum lf = factor_total_length(left, chains::kClasses);
  o.require(left.constant == Rational(23, 7), "left corner constant");
  o.require(lf.total_length_coefficient == Rational(2), "left corner coefficient");
  o.require(lf.remainder.count("B0") && lf.remainder.at("B0") == Rational(1, 2), "left corner B0 coefficient");
  o.note("85/14 with 4; 23/7 with (2, 1/2)");
}

void reductions(Outcome& o) {
  std::mt19937_64 rng(20240602);
  std::uniform_real_distribution<double> u(-1.0, 2.0), t(0.0, 1.0);
  auto segment = [&] {
    for (;;) {
      const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
      if (distance(a, b) > 1e-3) return Segment(a, b);
    }
  };
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Segment s = segment();
    for (GridOffset g : {GridOffset::zero, GridOffset::pi6}) {
      const double predicted = w_factor(fold_angle(s.angle(), g)) * s.length();
      worst = std::max(worst, std::abs(reduce_segment(s, g).replacement.total_length() - predicted));
    }
  }
  o.require(worst <= 1e-12, "length law");
  long failures = 0, pairs = 0;
  for (GridOffset g : {GridOffset::zero, GridOffset::pi6}) {
    for (int i = 0; i < 100000; ++i) {
      const Segment s = segment();
      const Point p = s.point_at(t(rng));
      const Angle normal(kPi * t(rng));
      const Line line{normal, project_point(p, normal)};
      ++pairs;
      if (!blocks(reduce_segment(s, g).replacement, line, 1e-9)) ++failures;
    }
  }
  o.require(failures == 0, "blocking preserved");
  o.note("max length error " + num(worst) + ", " + std::to_string(failures) + " of " + std::to_string(pairs) +
         " lines missed");
}

void verification(Outcome& o) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  o.require(is_barrier(make_boundary_barrier(tri), tri, 720).status == CoverageStatus::certified, "boundary");
  const Barrier two = make_two_sides_barrier();
  o.require(std::abs(two.total_length() - 2.0) <= 1e-12, "two-sides length");
  o.require(is_barrier(two, tri, 10000).status != CoverageStatus::refuted, "two-sides");
  const Barrier steiner = make_steiner_barrier();
  o.require(std::abs(steiner.total_length() - kSqrt3) <= 1e-12, "steiner length");
  const CoverageReport r = is_barrier(steiner, tri, 720);
  o.require(r.status == CoverageStatus::certified && r.method == CertificationMethod::connectivity,
            "steiner certified by connectivity");
  for (std::size_t i = 0; i < steiner.size(); ++i) {
    const CoverageReport m = is_barrier(steiner.without(i), tri, 720);
    o.require(m.status == CoverageStatus::refuted && m.witness_angle && m.witness_gap,
              "spoke " + std::to_string(i) + " removal refuted");
    if (m.witness_angle) o.note("spoke " + std::to_string(i) + " witness " + num(m.witness_angle->radians()));
  }
}

void lp(Outcome& o) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const LpInstance boundary =
      build_instance(build_line_family(tri, 180, 0.01), build_segment_family(FamilyMode::boundary_edges));
  const double vb = solve_lp(boundary).value;
  o.require(vb <= 1.5 + 1e-6, "boundary instance");

  const SegmentFamily grid = build_segment_family(FamilyMode::grid, {6, steiner_angles(), 1.0});
  double prev = 0.0;
  std::string values;
  for (auto [k, h] : {std::pair{12, 0.1}, std::pair{36, 0.1 / 3}, std::pair{108, 0.1 / 9}}) {
    const double v = solve_lp(build_instance(build_line_family(tri, k, h), grid)).value;
    o.require(v >= 1.5 && v <= kSqrt3 + 1e-6, "restricted value range at k = " + std::to_string(k));
    o.require(v >= prev - 1e-9, "restricted values nondecreasing");
    values += (values.empty() ? "" : " ") + num(v);
    prev = v;
  }

  const LpInstance fine = build_instance(build_line_family(tri, 360, 0.005),
                                         build_segment_family(FamilyMode::grid, {5, {}, 0.2}));
  const std::vector<double> y = scaled_uniform_dual(fine);
  double obj = 0.0;
  for (double v : y) obj += v;
  o.require(check_dual_feasible(fine, y), "uniform dual feasible");
  o.require(obj >= 1.49, "uniform dual objective");
  o.note("boundary " + num(vb) + ", restricted " + values + ", uniform dual " + num(obj) +
         " (raw load ratio " + num(worst_dual_load(fine, uniform_jones_dual(fine.lines))) + ")");
}

void overlap(Outcome& o) {
  std::mt19937_64 rng(20240601);
  double worst = -1e300;
  for (int i = 0; i < 100; ++i) {
    const BandSample s = random_band_sample(rng);
    o.require(satisfies_band_hypotheses(s), "sample " + std::to_string(i) + " hypotheses");
    const Barrier both = s.minus.concat(s.plus);
    const double gap = projection_integral(both) - overlap_deficit(s.config, both.total_length());
    worst = std::max(worst, gap);
  }
  o.require(worst <= 1e-6, "integral within the deficit bound");
  o.note("max (integral - bound) = " + num(worst));
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "Jones bound for triangle and square", 1, jones);
  ok &= run_criterion(2, "restricted-class ratio tends to sqrt 3", 5, restricted_bound);
  ok &= run_criterion(3, "corner root delta", 1, corner_root);
  ok &= run_criterion(4, "final bound exceeds 3/2 + 5e-13", 10, final_theorem);
  ok &= run_criterion(5, "inequality chains replay exactly", 1, chain_replay);
  ok &= run_criterion(6, "grid reductions keep length law and blocking", 30, reductions);
  ok &= run_criterion(7, "barrier verification", 10, verification);
  ok &= run_criterion(8, "covering LP experiments", 60, lp);
  ok &= run_criterion(9, "overlap deficit on synthetic clusters", 30, overlap);
  return ok ? 0 : 1;
}
