#include "opaque/weight_function.hpp"

#include <algorithm>
#include <cmath>

#include "opaque/error.hpp"
#include "opaque/geometry.hpp"

namespace opaque {

WeightFunction WeightFunction::exponential(double c) {
  if (!std::isfinite(c) || c < 0.0) throw DomainError("weight exponent c must be finite and >= 0");
  WeightFunction z;
  z.c_ = c;
  return z;
}

WeightFunction WeightFunction::tabulated(std::vector<double> values) {
  if (values.size() < 2) throw DomainError("tabulated weight needs at least two values");
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("tabulated weight values must be finite and >= 0");
  }
  if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) {
    throw DomainError("tabulated weight is identically zero");
  }
  WeightFunction z;
  z.table_ = std::move(values);
  return z;
}

double WeightFunction::base(double u) const {
  u = std::clamp(u, 0.0, kPi / 6.0);
  if (c_) return std::exp(-*c_ * u);
  const double pos = u / (kPi / 6.0) * static_cast<double>(table_.size() - 1);
  const std::size_t i = std::min(static_cast<std::size_t>(pos), table_.size() - 2);
  const double t = pos - static_cast<double>(i);
  return (1.0 - t) * table_[i] + t * table_[i + 1];
}

double WeightFunction::operator()(double alpha) const {
  const double period = kPi / 3.0;
  double t = std::fmod(alpha, period);
  if (t < 0.0) t += period;
  return base(t <= kPi / 6.0 ? t : period - t);
}

std::vector<double> WeightFunction::kinks() const {
  std::vector<double> out;
  for (int k = 0; k <= 6; ++k) out.push_back(k * kPi / 6.0);
  if (!table_.empty()) {
    const double h = (kPi / 6.0) / static_cast<double>(table_.size() - 1);
    for (int period = 0; period < 3; ++period) {
      const double a = period * kPi / 3.0;
      for (std::size_t i = 1; i + 1 < table_.size(); ++i) {
        out.push_back(a + static_cast<double>(i) * h);
        out.push_back(a + kPi / 3.0 - static_cast<double>(i) * h);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opaque
