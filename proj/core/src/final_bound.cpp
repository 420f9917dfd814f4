#include "opaque/final_bound.hpp"

#include <cmath>
#include <tuple>

#include "opaque/bounds.hpp"
#include "opaque/error.hpp"

namespace opaque {

namespace {

constexpr double kWMax = 2.0 / kSqrt3;  // w(pi/6)

void check_domain(double beta, double epsilon, double l3, double l6) {
  if (!(beta >= 0.0 && beta <= kPi / 6.0)) throw DomainError("final bound: beta must lie in [0, pi/6]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw DomainError("final bound: epsilon must lie in [0, 1]");
  if (!(l3 >= 1.5) || !std::isfinite(l3)) throw DomainError("final bound: L3 must be >= 3/2");
  if (!(l6 > 0.0) || !std::isfinite(l6)) throw DomainError("final bound: L6 must be positive");
}

// w(beta) - 1 = -2 sin^2(beta/2) + sin(beta)/sqrt 3.
double w_minus_one(double beta) {
  const double s = std::sin(beta / 2.0);
  return -2.0 * s * s + std::sin(beta) / kSqrt3;
}

}  // namespace

double default_l3() { return 1.5 + restricted3_delta(); }

FinalBoundTerms final_bound_terms(double beta, double epsilon, double l3, double l6) {
  check_domain(beta, epsilon, l3, l6);
  FinalBoundTerms t;

  const double den1 = (1.0 - epsilon) * w_factor(beta) + epsilon * kWMax;
  const double den2 = epsilon * w_factor(kPi / 6.0 - beta) + (1.0 - epsilon) * kWMax;
  t.case1 = l3 / den1;
  t.case2 = l6 / den2;

  // L3 - 3/2 den1 = (L3 - 3/2) - 3/2 (den1 - 1).
  const double den1_minus_one = (1.0 - epsilon) * w_minus_one(beta) + epsilon * (kWMax - 1.0);
  t.case1_excess = ((l3 - 1.5) - 1.5 * den1_minus_one) / den1;

  // With w(pi/6 - beta) = (2/sqrt 3) cos beta:
  // L6 - 3/2 den2 = (L6 - sqrt 3) + 2 sqrt 3 eps sin^2(beta/2).
  const double s = std::sin(beta / 2.0);
  t.case2_excess = ((l6 - kSqrt3) + 2.0 * kSqrt3 * epsilon * s * s) / den2;
  return t;
}

double final_bound(double beta, double epsilon, double l3, double l6) {
  return final_bound_terms(beta, epsilon, l3, l6).value();
}

double final_bound_excess(double beta, double epsilon, double l3, double l6) {
  return final_bound_terms(beta, epsilon, l3, l6).excess();
}

double final_bound_literal_split(double beta, double epsilon, double l3, double l6) {
  check_domain(beta, epsilon, l3, l6);
  return final_bound(beta, 1.0 / (2.0 - epsilon), l3, l6);
}

// ---------------------------------------------------------------------------

FinalBoundOptimum optimize_final_bound(double l3, double l6) {
  if (!(l3 > 1.5)) throw DomainError("optimize_final_bound: L3 must exceed 3/2");
  constexpr double lo = -6.0;
  constexpr double hi = -2.0;

  FinalBoundOptimum best;
  bool have = false;
  auto consider = [&](double lb, double le) {
    const double beta = std::pow(10.0, lb);
    const double eps = std::pow(10.0, le);
    const double excess = final_bound_excess(beta, eps, l3, l6);
    const bool better = !have || excess > best.excess ||
                        (excess == best.excess &&
                         std::tie(beta, eps) < std::tie(best.beta, best.epsilon));
    if (better) {
      best = {lb, le, beta, eps, excess};
      have = true;
    }
  };

  // Coarse grid: log10 = (i - 120) / 20 for i = 0..80.
  for (int i = 0; i <= 80; ++i) {
    for (int j = 0; j <= 80; ++j) consider((i - 120) / 20.0, (j - 120) / 20.0);
  }

  double step = 0.05;
  for (int round = 0; round < 2; ++round) {
    step /= 10.0;
    const double cb = best.log10_beta;
    const double ce = best.log10_epsilon;
    for (int i = -10; i <= 10; ++i) {
      const double lb = cb + i * step;
      if (lb < lo - 1e-12 || lb > hi + 1e-12) continue;
      for (int j = -10; j <= 10; ++j) {
        const double le = ce + j * step;
        if (le < lo - 1e-12 || le > hi + 1e-12) continue;
        consider(lb, le);
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

std::vector<BoundCertificate> final_theorem_certificates(double l3) {
  std::vector<BoundCertificate> out;

  out.push_back(jones_bound(ConvexPolygon::unit_triangle(), "jones.unit_triangle"));

  constexpr double c = 1e4;
  BoundCertificate ratio;
  ratio.name = "weighted_ratio";
  ratio.value = weighted_ratio_closed_form(c);
  ratio.parameters = {{"c", c}};
  ratio.depends_on = {"jones.unit_triangle"};
  ratio.tolerance = 1e-9;
  out.push_back(ratio);

  BoundCertificate limit;
  limit.name = "restricted6.limit";
  limit.value = kSqrt3;
  limit.parameters = {{"c", c}, {"gap_at_c", kSqrt3 - ratio.value}};
  limit.depends_on = {"weighted_ratio"};
  limit.tolerance = 1e-3;
  out.push_back(limit);

  const double delta = restricted3_delta();
  BoundCertificate r3;
  r3.name = "restricted3";
  r3.value = 1.5 + delta;
  r3.parameters = {{"delta", delta},
                   {"residual", restricted3_residual(delta)},
                   {"D", corner_disk_diameter()}};
  r3.depends_on = {"jones.unit_triangle"};
  r3.tolerance = 1e-12;
  out.push_back(r3);

  const double beta = std::pow(10.0, kReferenceLog10Beta);
  const double eps = std::pow(10.0, kReferenceLog10Epsilon);
  const double excess = final_bound_excess(beta, eps, l3);
  BoundCertificate reference;
  reference.name = "final_bound";
  reference.value = 1.5 + excess;
  reference.parameters = {{"beta", beta}, {"epsilon", eps}, {"L3", l3}, {"L6", kSqrt3},
                           {"excess", excess}};
  reference.depends_on = {"restricted3", "restricted6.limit"};
  reference.tolerance = 1e-15;
  out.push_back(reference);

  const FinalBoundOptimum opt = optimize_final_bound(l3);
  BoundCertificate theorem;
  theorem.name = "final_theorem";
  theorem.value = opt.value();
  theorem.parameters = {{"beta", opt.beta},
                        {"epsilon", opt.epsilon},
                        {"log10_beta", opt.log10_beta},
                        {"log10_epsilon", opt.log10_epsilon},
                        {"L3", l3},
                        {"L6", kSqrt3},
                        {"excess", opt.excess}};
  theorem.depends_on = {"final_bound"};
  theorem.tolerance = 1e-15;
  out.push_back(theorem);
  return out;
}

}  // namespace opaque
