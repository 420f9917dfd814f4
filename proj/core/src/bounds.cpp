#include "opaque/bounds.hpp"

#include <cmath>
#include <complex>

#include "opaque/error.hpp"
#include "opaque/quadrature.hpp"

namespace opaque {

double cauchy_integral(const ConvexPolygon& polygon) {
  const std::vector<double> kinks = width_kinks(polygon);
  return integrate([&](double a) { return polygon_width(polygon, Angle(a)); }, 0.0, kPi, kinks,
                   {.absolute = 1e-12, .relative = 1e-12});
}

BoundCertificate jones_bound(const ConvexPolygon& polygon, std::string name) {
  const double perimeter = polygon.perimeter();
  const double cauchy = cauchy_integral(polygon);
  BoundCertificate cert;
  cert.name = std::move(name);
  cert.value = perimeter / 2.0;
  cert.parameters = {{"perimeter", perimeter},
                     {"cauchy_integral", cauchy},
                     {"cauchy_difference", std::abs(cauchy / 2.0 - perimeter / 2.0)}};
  cert.tolerance = 1e-6;
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kPiece = kPi / 6.0;

// Integral over u in [0, pi/6] of exp(-c u) cos(theta + s u).
double damped_cosine(double c, double theta, double s) {
  const std::complex<double> k(-c, s);
  const std::complex<double> value = std::polar(1.0, theta) * (std::exp(k * kPiece) - 1.0) / k;
  return value.real();
}

double abs_cos_pi6(double alpha) { return std::abs(std::cos(kPi / 6.0 - alpha)); }

}  // namespace

WeightedIntegrals weighted_integrals_closed_form(double c) {
  if (!std::isfinite(c) || c < 0.0) throw DomainError("closed form needs finite c >= 0");
  WeightedIntegrals out;
  // Piece k covers [k pi/6, (k+1) pi/6]. With a the nearest multiple of
  // pi/3 and u the distance to it, alpha = a + sigma u and z = exp(-c u).
  for (int k = 0; k < 6; ++k) {
    const bool rising = k % 2 == 0;
    const double anchor = (rising ? k / 2 : (k + 1) / 2) * (kPi / 3.0);
    const double sigma = rising ? 1.0 : -1.0;

    // |U(alpha)| = cos u on every piece.
    out.numerator += damped_cosine(c, 0.0, 1.0);

    // |cos(pi/6 - alpha)| = sign * cos(theta - sigma u); the sign is fixed
    // on the piece because the kink of |cos| sits on a piece boundary.
    const double theta = kPi / 6.0 - anchor;
    const double sign = std::cos(theta - sigma * kPiece / 2.0) < 0.0 ? -1.0 : 1.0;
    out.denominator += sign * damped_cosine(c, theta, -sigma);
  }
  return out;
}

double weighted_ratio_closed_form(double c) { return weighted_integrals_closed_form(c).ratio(); }

WeightedIntegrals weighted_integrals(const WeightFunction& z, RatioMethod method) {
  if (method == RatioMethod::automatic && z.exponent()) {
    return weighted_integrals_closed_form(*z.exponent());
  }
  const std::vector<double> kinks = z.kinks();
  const QuadratureOptions opts{.absolute = 1e-10, .relative = 1e-12};
  WeightedIntegrals out;
  out.numerator = integrate([&](double a) { return z(a) * triangle_width(a); }, 0.0, kPi, kinks, opts);
  out.denominator = integrate([&](double a) { return z(a) * abs_cos_pi6(a); }, 0.0, kPi, kinks, opts);
  return out;
}

double weighted_ratio(const WeightFunction& z, RatioMethod method) {
  const WeightedIntegrals w = weighted_integrals(z, method);
  if (!(w.denominator > 0.0)) throw DomainError("weighted_ratio: denominator vanishes");
  return w.ratio();
}

double restricted_cover_rhs(std::span<const ClassLength> classes, Angle alpha) {
  double total = 0.0;
  for (const ClassLength& c : classes) {
    if (!(c.length >= 0.0)) throw DomainError("restricted_cover_rhs: class lengths must be >= 0");
    total += c.length * std::abs(std::cos(c.angle.radians() - alpha.radians()));
  }
  return total;
}

// ---------------------------------------------------------------------------

double BandConfig::band_width() const { return n * l * std::sin(lambda - kappa); }

void BandConfig::validate() const {
  if (!(lambda > 0.0 && lambda < kPi / 2.0)) throw DomainError("band config: lambda must lie in (0, pi/2)");
  if (!(kappa >= 0.0)) throw DomainError("band config: kappa must be >= 0");
  if (!(kappa < lambda)) throw DomainError("band config: kappa must be smaller than lambda");
  if (!(l > 0.0)) throw DomainError("band config: segment length must be positive");
  if (n < 0) throw DomainError("band config: n must be >= 0");
  if (!(D > 0.0)) throw DomainError("band config: D must be positive");
}

double deficit_term(const BandConfig& cfg) {
  cfg.validate();
  const double w = cfg.band_width();
  return w * w / cfg.D;
}

double overlap_deficit(const BandConfig& cfg, double total_length) {
  const double deficit = deficit_term(cfg);
  const double expected = 2.0 * cfg.n * cfg.l;
  if (std::abs(total_length - expected) > 1e-12 * std::max(1.0, expected)) {
    throw DomainError("overlap_deficit: total length must equal 2 n l");
  }
  return 2.0 * total_length - deficit;
}

// ---------------------------------------------------------------------------

double right_corner_mass(double delta) {
  if (!(delta >= 0.0)) throw DomainError("delta must be >= 0");
  return 1.0 / 28.0 - 2.5 * delta;
}

double left_corner_mass(double delta) {
  if (!(delta >= 0.0)) throw DomainError("delta must be >= 0");
  return 1.0 / 28.0 - 2.5 * delta;
}

double corner_disk_diameter() { return std::sqrt(307.0) / (7.0 * kSqrt3); }

BandConfig corner_band_config(double delta) {
  return {.lambda = kPi / 3.0, .kappa = kPi / 6.0, .l = right_corner_mass(delta), .n = 1,
          .D = corner_disk_diameter()};
}

double restricted3_rhs(double delta) {
  // sin(pi/6) = 1/2 exactly; written out so the root does not inherit
  // rounding from std::sin.
  const double w = 1.0 / 56.0 - 1.25 * delta;
  return w * w * (7.0 * kSqrt3) / (2.0 * std::sqrt(307.0));
}

double restricted3_residual(double delta) { return delta - restricted3_rhs(delta); }

double restricted3_delta() {
  double lo = 0.0;
  double hi = 1.0 / 70.0;
  // residual(0) < 0 and residual(1/70) = 1/70 > 0.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (restricted3_residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::abs(restricted3_residual(lo)) <= std::abs(restricted3_residual(hi)) ? lo : hi;
}

double w_factor(double phi) {
  if (!(phi >= 0.0 && phi <= kPi / 3.0)) throw DomainError("w_factor: phi must lie in [0, pi/3]");
  return std::cos(phi) + std::sin(phi) / kSqrt3;
}

}  // namespace opaque
