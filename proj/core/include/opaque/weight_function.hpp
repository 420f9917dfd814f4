#pragma once

#include <optional>
#include <vector>

namespace opaque {

/// Weight z on [0, pi] built from a base z' on [0, pi/6]: z = z'(t) for
/// t in [0, pi/6], z'(pi/3 - t) on [pi/6, pi/3], then pi/3-periodic.
class WeightFunction {
 public:
  /// z'(u) = exp(-c u), which is e^{c(pi/6 - u)} up to a constant factor.
  /// The weighted ratio does not see constant factors.
  static WeightFunction exponential(double c);

  /// Piecewise-linear z' through values at equally spaced nodes
  /// 0, h, ..., pi/6 (at least two values, all finite and >= 0).
  static WeightFunction tabulated(std::vector<double> values);

  /// Exponent of the exponential family, if this is one.
  std::optional<double> exponent() const { return c_; }
  const std::vector<double>& table() const { return table_; }

  double base(double u) const;
  double operator()(double alpha) const;

  /// Angles in [0, pi] where z may fail to be smooth: multiples of pi/6,
  /// plus the images of the table nodes.
  std::vector<double> kinks() const;

 private:
  WeightFunction() = default;

  std::optional<double> c_;
  std::vector<double> table_;
};

}  // namespace opaque
