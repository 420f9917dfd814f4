#pragma once

#include <vector>

#include "opaque/certificate.hpp"
#include "opaque/geometry.hpp"

namespace opaque {

/// Reference parameters: beta = 10^-4.1,
/// epsilon = 10^-3.9.
inline constexpr double kReferenceLog10Beta = -4.1;
inline constexpr double kReferenceLog10Epsilon = -3.9;

/// Default for L3: 3/2 + restricted3_delta().
double default_l3();

/// Both branches of the final min. Case 1 holds when the segments within
/// beta of {0, pi/3, 2pi/3} carry at least (1 - epsilon)|B|, case 2
/// otherwise.
struct FinalBoundTerms {
  double case1 = 0.0;         // L3 / ((1 - eps) w(beta) + eps w(pi/6))
  double case2 = 0.0;         // L6 / (eps w(pi/6 - beta) + (1 - eps) w(pi/6))
  double case1_excess = 0.0;  // case1 - 3/2, without cancellation
  double case2_excess = 0.0;  // case2 - 3/2, without cancellation
  double value() const { return case1 < case2 ? case1 : case2; }
  double excess() const { return case1_excess < case2_excess ? case1_excess : case2_excess; }
};

/// Throws DomainError unless 0 <= beta <= pi/6, 0 <= epsilon <= 1,
/// L3 >= 3/2 and L6 > 0.
FinalBoundTerms final_bound_terms(double beta, double epsilon, double l3, double l6 = kSqrt3);

double final_bound(double beta, double epsilon, double l3, double l6 = kSqrt3);

/// final_bound - 3/2, each branch rearranged as
/// (numerator - 3/2 denominator) / denominator with the small differences
/// expanded analytically.
double final_bound_excess(double beta, double epsilon, double l3, double l6 = kSqrt3);

/// The bound under the literal case split |C| >= (1 - eps)|D|, which only
/// gives |C| >= |B| (1 - eps) / (2 - eps). Kept as a diagnostic.
double final_bound_literal_split(double beta, double epsilon, double l3, double l6 = kSqrt3);

struct FinalBoundOptimum {
  double log10_beta = 0.0;
  double log10_epsilon = 0.0;
  double beta = 0.0;
  double epsilon = 0.0;
  double excess = 0.0;
  double value() const { return 1.5 + excess; }
};

/// Grid search of final_bound_excess over (log10 beta, log10 eps) in
/// [-6, -2]^2 at step 0.05, then two rounds of 10x finer grids of +-10
/// steps around the incumbent, clamped to the box. Equal maxima go to the
/// lexicographically smallest (beta, epsilon). Throws DomainError unless
/// L3 > 3/2.
FinalBoundOptimum optimize_final_bound(double l3, double l6 = kSqrt3);

/// The full dependency chain behind 3/2 + 5e-13: Jones' bound, the
/// restricted-class limit, the corner root, the reference point and the
/// optimised point. Ordered so every certificate follows its dependencies.
std::vector<BoundCertificate> final_theorem_certificates(double l3);

}  // namespace opaque
