#include "opaque/overlap.hpp"

#include <algorithm>
#include <cmath>

#include "opaque/quadrature.hpp"

namespace opaque {

double projection_integral(const Barrier& barrier) {
  std::vector<Point> pts;
  for (const Segment& s : barrier.segments()) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  std::vector<double> breaks;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point d = pts[j] - pts[i];
      if (d == Point{}) continue;
      breaks.push_back(normalize_angle(std::atan2(d.y, d.x) + kPi / 2.0));
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return integrate(
      [&](double a) { return project_segments(barrier.segments(), Angle(a)).measure(); }, 0.0, kPi,
      breaks, {.absolute = 1e-12, .relative = 1e-12});
}

namespace {

// Chain of n segments of length l going up from `start`, angles uniform in
// (lambda, pi - lambda).
std::vector<Segment> steep_chain(Point start, int n, double l, double lambda, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(lambda + 1e-3, kPi - lambda - 1e-3);
  std::vector<Segment> out;
  Point p = start;
  for (int i = 0; i < n; ++i) {
    const double t = angle(rng);
    const Point q = p + l * Point{std::cos(t), std::sin(t)};
    out.emplace_back(p, q);
    p = q;
  }
  return out;
}

std::vector<Segment> shifted(std::vector<Segment> chain, Point by) {
  for (Segment& s : chain) s = Segment(s.a() + by, s.b() + by);
  return chain;
}

double max_radius(const Barrier& b) {
  double r = 0.0;
  for (const Segment& s : b.segments()) r = std::max({r, norm(s.a()), norm(s.b())});
  return r;
}

}  // namespace

BandSample random_band_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BandConfig cfg;
  cfg.lambda = 0.3 + 1.2 * unit(rng);
  cfg.kappa = cfg.lambda * (0.1 + 0.8 * unit(rng));
  cfg.n = 1 + static_cast<int>(unit(rng) * 6.0);
  cfg.l = 0.02 + 0.3 * unit(rng);

  const double w = cfg.band_width();
  const double height = cfg.n * cfg.l;  // bound on the vertical extent
  const double wiggle = cfg.n * cfg.l * std::cos(cfg.lambda);
  // Keep |y| <= x tan(kappa) - W / (2 cos kappa) for every chain point.
  const double x_near = (height / 2.0 + w / (2.0 * std::cos(cfg.kappa))) / std::tan(cfg.kappa);
  const double gap = x_near + wiggle + 0.05 * unit(rng) + 1e-6;

  auto place = [&](double side) {
    std::vector<Segment> chain = steep_chain({0.0, 0.0}, cfg.n, cfg.l, cfg.lambda, rng);
    double lo_x = 1e300, hi_x = -1e300, hi_y = chain.back().b().y;
    for (const Segment& s : chain) {
      lo_x = std::min({lo_x, s.a().x, s.b().x});
      hi_x = std::max({hi_x, s.a().x, s.b().x});
    }
    const double dx = side > 0 ? gap - lo_x + wiggle : -gap - hi_x - wiggle;
    return Barrier(shifted(std::move(chain), {dx, -hi_y / 2.0}));
  };

  BandSample sample;
  sample.plus = place(1.0);
  sample.minus = place(-1.0);
  const double r = std::max(max_radius(sample.plus), max_radius(sample.minus));
  sample.config = cfg;
  sample.config.D = 2.0 * r * (1.0 + 0.5 * unit(rng)) + 1e-9;
  return sample;
}

bool satisfies_band_hypotheses(const BandSample& sample) {
  const BandConfig& cfg = sample.config;
  constexpr double tol = 1e-12;
  const double w = cfg.band_width();
  const double tk = std::tan(cfg.kappa);
  auto check = [&](const Barrier& b, double side) {
    if (static_cast<int>(b.size()) != cfg.n) return false;
    for (const Segment& s : b.segments()) {
      if (std::abs(s.length() - cfg.l) > 1e-9) return false;
      const double a = s.angle().radians();
      if (!(a > cfg.lambda && a < kPi - cfg.lambda)) return false;
      for (Point p : {s.a(), s.b()}) {
        if (norm(p) > cfg.D / 2.0 + tol) return false;
        if (side * p.x <= 0.0) return false;
        const double x = std::abs(p.x);
        if (std::abs(p.y) > x * tk + tol) return false;
        // Distance to both band centre lines y = +-x tan(kappa).
        const double d1 = std::abs(p.x * std::sin(cfg.kappa) - p.y * std::cos(cfg.kappa));
        const double d2 = std::abs(p.x * std::sin(cfg.kappa) + p.y * std::cos(cfg.kappa));
        if (std::min(d1, d2) < w / 2.0 - tol) return false;
      }
    }
    return true;
  };
  return check(sample.plus, 1.0) && check(sample.minus, -1.0);
}

}  // namespace opaque
