#include <doctest.h>

#include <cmath>
#include <random>

#include "opaque/bounds.hpp"
#include "opaque/error.hpp"
#include "opaque/final_bound.hpp"

using namespace opaque;

namespace {
const double kBeta = std::pow(10.0, kReferenceLog10Beta);
const double kEps = std::pow(10.0, kReferenceLog10Epsilon);
}  // namespace

TEST_SUITE("final_bound") {

TEST_CASE("degenerate point gives exactly 3/2") {
  // sqrt 3 / w(pi/6) is 3/2 up to one rounding.
  CHECK(std::abs(final_bound(0, 0, 1.5001) - 1.5) <= 2.3e-16);
  CHECK(final_bound_excess(0, 0, 1.5001) == 0.0);
}

TEST_CASE("reference point against the high-precision oracle") {
  // mpmath at 50 digits: 5.957461757302057146e-13 for both L3 values.
  for (double l3 : {1.5001, default_l3()}) {
    const double e = final_bound_excess(kBeta, kEps, l3);
    CHECK(std::abs(e - 5.957461757302057146e-13) < 1e-24);
    CHECK(e >= 5e-13);
    CHECK(e <= 1e-12);
    CHECK(final_bound(kBeta, kEps, l3) >= 1.5 + 5e-13);
  }
  const FinalBoundTerms t15001 = final_bound_terms(kBeta, kEps, 1.5001);
  CHECK(t15001.case1_excess == doctest::Approx(2.008951802e-6).epsilon(1e-8));
  const FinalBoundTerms td = final_bound_terms(kBeta, kEps, default_l3());
  CHECK(td.case1_excess == doctest::Approx(1.066390506e-5).epsilon(1e-8));
  CHECK(td.case2_excess < td.case1_excess);
}

TEST_CASE("leading order of the excess") {
  const double e = final_bound_excess(kBeta, kEps, default_l3());
  CHECK(e == doctest::Approx(0.75 * kEps * kBeta * kBeta).epsilon(0.01));
}

TEST_CASE("excess agrees with the naive difference") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-3.0, -1.0);
  for (int i = 0; i < 200; ++i) {
    const double b = std::pow(10.0, u(rng));
    const double e = std::pow(10.0, u(rng));
    const double naive = final_bound(b, e, default_l3()) - 1.5;
    if (std::abs(naive) > 1e-10) CHECK(std::abs(final_bound_excess(b, e, default_l3()) - naive) <= 1e-15);
  }
}

TEST_CASE("final bound is continuous") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double b = 0.5 * i / 20;
      const double e = 0.9 * j / 20;
      const double v = final_bound(b, e, default_l3());
      CHECK(std::abs(final_bound(b + 1e-9, e, default_l3()) - v) <= 1e-6);
      CHECK(std::abs(final_bound(b, e + 1e-9, default_l3()) - v) <= 1e-6);
    }
  }
}

TEST_CASE("literal case split is much weaker") {
  CHECK(final_bound_literal_split(kBeta, kEps, default_l3()) < 1.5);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(final_bound(-0.1, 0.1, 1.5001), DomainError);
  CHECK_THROWS_AS(final_bound(0.1, 1.5, 1.5001), DomainError);
  CHECK_THROWS_AS(final_bound(0.1, 0.1, 1.4), DomainError);
  CHECK_THROWS_AS(optimize_final_bound(1.5), DomainError);
}

TEST_CASE("optimiser") {
  const FinalBoundOptimum a = optimize_final_bound(1.5001);
  CHECK(a.excess >= 5e-13);
  CHECK(a.excess == doctest::Approx(6.3835352834239605e-13).epsilon(1e-9));
  CHECK(a.excess >= final_bound_excess(kBeta, kEps, 1.5001));
  CHECK(a.beta == doctest::Approx(std::pow(10.0, a.log10_beta)));
  CHECK(a.log10_beta >= -6);
  CHECK(a.log10_beta <= -2);

  const FinalBoundOptimum d = optimize_final_bound(default_l3());
  CHECK(d.excess >= final_bound_excess(kBeta, kEps, default_l3()));
  CHECK(optimize_final_bound(1.5 + 1e-2).excess > a.excess);

  // Deterministic.
  const FinalBoundOptimum again = optimize_final_bound(1.5001);
  CHECK(again.log10_beta == a.log10_beta);
  CHECK(again.log10_epsilon == a.log10_epsilon);
  CHECK(again.excess == a.excess);
}

}  // TEST_SUITE
