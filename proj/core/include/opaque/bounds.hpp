#pragma once

#include <span>
#include <string>
#include <vector>

#include "opaque/certificate.hpp"
#include "opaque/geometry.hpp"
#include "opaque/weight_function.hpp"

namespace opaque {

// ---------------------------------------------------------------------------
// Jones' bound
// ---------------------------------------------------------------------------

/// Half the perimeter. Parameters record the perimeter, the Cauchy integral
/// of the width over [0, pi) and the difference between the two halves.
BoundCertificate jones_bound(const ConvexPolygon& polygon, std::string name = "jones");

/// Integral of polygon_width over [0, pi), split at the width kinks.
double cauchy_integral(const ConvexPolygon& polygon);

// ---------------------------------------------------------------------------
// Weighted projection-cover ratio for {pi/6, pi/2, 5pi/6}-restricted barriers
// ---------------------------------------------------------------------------

struct WeightedIntegrals {
  double numerator = 0.0;    // integral of z |U|
  double denominator = 0.0;  // integral of z |cos(pi/6 - alpha)|
  double ratio() const { return numerator / denominator; }
};

enum class RatioMethod {
  automatic,  // closed form for the exponential family, quadrature otherwise
  quadrature,
};

WeightedIntegrals weighted_integrals(const WeightFunction& z,
                                     RatioMethod method = RatioMethod::automatic);

/// Lower bound on any restricted barrier obtained from weight z.
double weighted_ratio(const WeightFunction& z, RatioMethod method = RatioMethod::automatic);

/// Exponential family evaluated piece by piece with elementary
/// antiderivatives. Throws DomainError for c < 0.
WeightedIntegrals weighted_integrals_closed_form(double c);
double weighted_ratio_closed_form(double c);

struct ClassLength {
  Angle angle;
  double length = 0.0;
};

/// Sum over classes of length * |cos(angle - alpha)|.
double restricted_cover_rhs(std::span<const ClassLength> classes, Angle alpha);

// ---------------------------------------------------------------------------
// Overlap deficit
// ---------------------------------------------------------------------------

/// Two clusters of n segments of length l each, steeper than lambda,
/// separated by bands of half-angle kappa, all inside a disk of diameter D.
struct BandConfig {
  double lambda = 0.0;
  double kappa = 0.0;
  double l = 0.0;
  int n = 0;
  double D = 0.0;

  /// n l sin(lambda - kappa).
  double band_width() const;
  /// Throws DomainError unless 0 < lambda < pi/2, 0 <= kappa < lambda,
  /// l > 0, n >= 0 and D > 0.
  void validate() const;
};

/// W^2 / D.
double deficit_term(const BandConfig& cfg);

/// Upper bound 2 * total_length - W^2 / D on the integral of the projected
/// measure of both clusters. total_length must equal 2 n l.
double overlap_deficit(const BandConfig& cfg, double total_length);

// ---------------------------------------------------------------------------
// {0, pi/3, 2pi/3}-restricted barriers of length 3/2 + delta
// ---------------------------------------------------------------------------

/// Guaranteed mass of a single class near the right corner: 1/28 - 2.5 delta.
double right_corner_mass(double delta);
/// Guaranteed mass of the pi/3 and 2pi/3 classes near the left corner.
double left_corner_mass(double delta);

/// Diameter of the disk holding both corner clusters: sqrt(307) / (7 sqrt 3).
double corner_disk_diameter();

/// Band configuration for the two corner clusters: one cluster of length
/// right_corner_mass(delta) per side, lambda = pi/3, kappa = pi/6.
BandConfig corner_band_config(double delta);

/// Half the overlap deficit of the corner clusters,
/// (1/56 - 5 delta / 4)^2 * 7 sqrt 3 / (2 sqrt 307).
double restricted3_rhs(double delta);

/// The root of delta = restricted3_rhs(delta) in [0, 1/70], by bisection
/// until the bracket cannot shrink further.
double restricted3_delta();

/// delta - restricted3_rhs(delta).
double restricted3_residual(double delta);

// ---------------------------------------------------------------------------
// Reduction factor
// ---------------------------------------------------------------------------

/// cos phi + sin phi / sqrt 3 for phi in [0, pi/3].
double w_factor(double phi);

}  // namespace opaque
