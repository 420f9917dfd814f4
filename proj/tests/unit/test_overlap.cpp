#include <doctest.h>

#include <random>

#include "opaque/barrier.hpp"
#include "opaque/bounds.hpp"
#include "opaque/overlap.hpp"

using namespace opaque;

TEST_SUITE("overlap") {

TEST_CASE("projection integral of known barriers") {
  const Barrier one(std::vector<Segment>{Segment({0, 0}, {0.7, 0.2})});
  CHECK(projection_integral(one) == doctest::Approx(2 * one.total_length()).epsilon(1e-12));
  CHECK(projection_integral(make_steiner_barrier()) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(projection_integral(make_two_sides_barrier()) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(projection_integral(make_boundary_barrier(ConvexPolygon::unit_triangle())) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(projection_integral(Barrier()) == 0.0);
}

TEST_CASE("projection integral never exceeds twice the length") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<Segment> segs;
    for (int j = 0; j < 4; ++j) segs.push_back(Segment({u(rng), u(rng)}, {u(rng) + 1, u(rng)}));
    const Barrier b(segs);
    CHECK(projection_integral(b) <= 2 * b.total_length() + 1e-9);
  }
}

TEST_CASE("synthetic configurations respect the deficit bound") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const BandSample s = random_band_sample(rng);
    REQUIRE(satisfies_band_hypotheses(s));
    const Barrier both = s.minus.concat(s.plus);
    CHECK(both.total_length() == doctest::Approx(2 * s.config.n * s.config.l));
    CHECK(projection_integral(both) <= overlap_deficit(s.config, both.total_length()) + 1e-6);
  }
}

TEST_CASE("hypothesis check rejects a broken sample") {
  std::mt19937_64 rng(7);
  BandSample s = random_band_sample(rng);
  s.config.D *= 0.01;
  CHECK_FALSE(satisfies_band_hypotheses(s));
}

}  // TEST_SUITE
