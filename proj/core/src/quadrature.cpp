#include "opaque/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opaque/error.hpp"

namespace opaque {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double step(double a, double fa, double b, double fb, double m, double fm, double whole,
              double tol, int depth) const {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // The second test stops refinement once the difference is round-off.
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <= 1e-15 * std::abs(left + right)) {
      return left + right + delta / 15.0;
    }
    return step(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           step(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
  }
};

// Composite Simpson on 64 panels of |f|; only used to scale tolerances.
double magnitude(const std::function<double(double)>& f, double a, double b) {
  constexpr int n = 64;
  const double h = (b - a) / n;
  double sum = std::abs(f(a)) + std::abs(f(b));
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * std::abs(f(a + i * h));
  return sum * h / 3.0;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, QuadratureOptions options) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: bounds must be finite");
  if (!(options.absolute > 0.0)) throw DomainError("integrate: absolute tolerance must be positive");
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, breakpoints, options);

  std::vector<double> cuts{a};
  for (double t : breakpoints) {
    if (t > a && t < b) cuts.push_back(t);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Simpson simpson{f, options.max_depth};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    double tol = options.absolute;
    if (options.relative > 0.0) {
      const double scaled = options.relative * magnitude(f, lo, hi);
      if (scaled > 0.0) tol = std::min(tol, scaled);
    }
    const double flo = f(lo);
    const double fhi = f(hi);
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += simpson.step(lo, flo, hi, fhi, mid, fmid, whole, tol, 0);
  }
  return total;
}

}  // namespace opaque
