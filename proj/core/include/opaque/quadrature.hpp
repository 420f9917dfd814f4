#pragma once

#include <functional>
#include <span>

namespace opaque {

struct QuadratureOptions {
  /// Absolute error target per smooth piece.
  double absolute = 1e-10;
  /// When positive, the per-piece target is tightened to relative * S,
  /// where S is a coarse estimate of the integral of |f| over the piece.
  double relative = 0.0;
  int max_depth = 40;
};

/// Adaptive Simpson quadrature of f over [a, b]. The interval is first cut
/// at every breakpoint strictly inside (a, b); each piece is then refined
/// independently, so kinks of f should be passed as breakpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints = {}, QuadratureOptions options = {});

}  // namespace opaque
