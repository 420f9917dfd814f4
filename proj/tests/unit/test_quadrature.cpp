#include <doctest.h>

#include <cmath>
#include <random>

#include "opaque/bounds.hpp"
#include "opaque/error.hpp"
#include "opaque/quadrature.hpp"
#include "opaque/weight_function.hpp"

using namespace opaque;

TEST_SUITE("quadrature") {

TEST_CASE("smooth integrands") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0, kPi) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(x); }, 0, 1) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
  CHECK(integrate([](double) { return 1.0; }, 2, 2) == 0.0);
}

TEST_CASE("kinks are handled through breakpoints") {
  const std::vector<double> kink{0.3};
  const double v = integrate([](double x) { return std::abs(x - 0.3); }, 0, 1, kink);
  CHECK(std::abs(v - (0.045 + 0.245)) < 1e-14);
  // Breakpoints outside (a, b) are ignored.
  const std::vector<double> outside{-1.0, 5.0};
  CHECK(integrate([](double x) { return x; }, 0, 1, outside) == doctest::Approx(0.5));
}

TEST_CASE("cauchy formula") {
  CHECK(std::abs(cauchy_integral(ConvexPolygon::unit_triangle()) - 3.0) < 1e-6);
  CHECK(std::abs(cauchy_integral(ConvexPolygon::unit_square()) - 4.0) < 1e-6);
  CHECK(std::abs(cauchy_integral(ConvexPolygon::regular_hexagon(1.0)) - 6.0) < 1e-6);
  CHECK(integrate([](double a) { return triangle_width(a); }, 0, kPi,
                  width_kinks(ConvexPolygon::unit_triangle())) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("weight function symmetries") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, kPi);
  std::uniform_real_distribution<double> v(0.0, 2.0);
  std::vector<WeightFunction> zs{WeightFunction::exponential(0), WeightFunction::exponential(10),
                                 WeightFunction::exponential(1e3)};
  for (int i = 0; i < 5; ++i) zs.push_back(WeightFunction::tabulated({v(rng), v(rng), v(rng), v(rng)}));
  for (const WeightFunction& z : zs) {
    for (int i = 0; i < 200; ++i) {
      const double a = u(rng);
      CHECK(z(a) >= 0.0);
      CHECK(std::abs(z(a) - z(a + kPi / 3)) <= 1e-12);
      CHECK(std::abs(z(a) - z(kPi / 3 - a)) <= 1e-12);
    }
  }
}

TEST_CASE("weight function validation") {
  CHECK_THROWS_AS(WeightFunction::exponential(-1), DomainError);
  CHECK_THROWS_AS(WeightFunction::tabulated({1.0}), DomainError);
  CHECK_THROWS_AS(WeightFunction::tabulated({1.0, -0.5}), DomainError);
  CHECK_THROWS_AS(WeightFunction::tabulated({1.0, std::nan("")}), DomainError);
  const WeightFunction t = WeightFunction::tabulated({1.0, 3.0});
  CHECK(t.base(kPi / 12) == doctest::Approx(2.0));
  CHECK(WeightFunction::exponential(2).base(0.5) == doctest::Approx(std::exp(-1.0)));
}

}  // TEST_SUITE
