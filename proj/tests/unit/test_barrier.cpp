#include <doctest.h>

#include <random>

#include "opaque/barrier.hpp"
#include "opaque/bounds.hpp"
#include "opaque/error.hpp"
#include "support.hpp"

using namespace opaque;

TEST_SUITE("barrier") {

TEST_CASE("classic constructions") {
  const Barrier tri = make_boundary_barrier(ConvexPolygon::unit_triangle());
  CHECK(tri.size() == 3);
  CHECK(tri.total_length() == doctest::Approx(3.0));
  CHECK(make_boundary_barrier(ConvexPolygon::unit_square()).total_length() == doctest::Approx(4.0));
  CHECK(make_boundary_barrier(ConvexPolygon::regular_hexagon(1.0)).size() == 6);
  CHECK(make_boundary_barrier(ConvexPolygon::regular_hexagon(1.0)).total_length() == doctest::Approx(6.0));

  const Barrier two = make_two_sides_barrier();
  CHECK(two.size() == 2);
  CHECK(two.total_length() == doctest::Approx(2.0));

  const Barrier o = make_steiner_barrier();
  CHECK(o.size() == 3);
  CHECK(std::abs(o.total_length() - kSqrt3) < 1e-12);
  for (const Segment& s : o.segments()) {
    CHECK(s.a() == points::fermat);
    CHECK(s.length() == doctest::Approx(1.0 / kSqrt3));
  }
}

TEST_CASE("steiner spokes lie on the pi/6 grid") {
  const Barrier o = make_steiner_barrier();
  const auto d = decompose_by_angle(o, 1e-9);
  REQUIRE(d.classes.size() == 3);
  for (double a : {kPi / 6, kPi / 2, 5 * kPi / 6}) {
    const AngleClass* c = d.find(Angle(a));
    REQUIRE(c != nullptr);
    CHECK(c->members.total_length() == doctest::Approx(1.0 / kSqrt3));
  }
}

TEST_CASE("angle decomposition") {
  const auto tri = decompose_by_angle(make_boundary_barrier(ConvexPolygon::unit_triangle()), 1e-9);
  REQUIRE(tri.classes.size() == 3);
  for (double a : {0.0, kPi / 3, 2 * kPi / 3}) {
    REQUIRE(tri.find(Angle(a)) != nullptr);
    CHECK(tri.find(Angle(a))->members.total_length() == doctest::Approx(1.0));
  }
  const auto one = decompose_by_angle(make_steiner_barrier(), kPi);
  CHECK(one.classes.size() == 1);
}

TEST_CASE("angle decomposition conserves length") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Segment> segs;
    for (int i = 0; i < 20; ++i) segs.push_back(test::random_segment(rng));
    const Barrier b(segs);
    for (double tol : {1e-9, 0.1, 0.5}) {
      const auto d = decompose_by_angle(b, tol);
      std::size_t members = 0;
      for (const AngleClass& c : d.classes) {
        members += c.members.size();
        for (const Segment& s : c.members.segments()) {
          CHECK(angular_distance(s.angle(), c.representative) <= tol + 1e-15);
        }
      }
      CHECK(members == b.size());
      CHECK(std::abs(d.total_length() - b.total_length()) < 1e-12);
    }
  }
}

TEST_CASE("mass in region") {
  const Barrier tri = make_boundary_barrier(ConvexPolygon::unit_triangle());
  CHECK(mass_in_region(tri, Region(Slab(Angle(0), {-100, 100}))) == doctest::Approx(3.0));
  CHECK(mass_in_region(tri, Region(Slab(Angle(0), {5, 5}))) == 0.0);
  const Barrier unit(std::vector<Segment>{Segment({0, 0}, {1, 0})});
  CHECK(mass_in_region(unit, Region(Slab(Angle(0), {0.25, 0.75}))) == doctest::Approx(0.5));

  const std::vector<Angle> horizontal{Angle(0)};
  CHECK(mass_in_region(tri, Region(Slab(Angle(0), {-100, 100})), std::span<const Angle>(horizontal)) ==
        doctest::Approx(1.0));
}

TEST_CASE("verification of the classic barriers") {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const CoverageReport boundary = is_barrier(make_boundary_barrier(tri), tri, 360);
  CHECK(boundary.status == CoverageStatus::certified);

  const CoverageReport o = is_barrier(make_steiner_barrier(), tri, 360);
  CHECK(o.status == CoverageStatus::certified);
  CHECK(o.method == CertificationMethod::connectivity);

  CHECK(is_barrier(make_two_sides_barrier(), tri, 720).status != CoverageStatus::refuted);

  const Barrier side(std::vector<Segment>{Segment(points::p1, points::p2)});
  const CoverageReport r = is_barrier(side, tri, 360);
  CHECK(r.status == CoverageStatus::refuted);
  REQUIRE(r.witness_angle.has_value());
  REQUIRE(r.witness_gap.has_value());
  CHECK(r.witness_gap->measure() > kGapTolerance);

  CHECK_THROWS_AS(is_barrier(side, tri, 4), DomainError);
}

TEST_CASE("refutation witnesses are genuine") {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const Barrier o = make_steiner_barrier();
  const Barrier two = make_two_sides_barrier();
  std::vector<Barrier> broken;
  for (std::size_t i = 0; i < o.size(); ++i) broken.push_back(o.without(i));
  for (std::size_t i = 0; i < two.size(); ++i) broken.push_back(two.without(i));
  for (const Barrier& b : broken) {
    const CoverageReport r = is_barrier(b, tri, 720);
    REQUIRE(r.status == CoverageStatus::refuted);
    // The line through the middle of the gap meets U but misses B.
    const double mid = 0.5 * (r.witness_gap->lo + r.witness_gap->hi);
    const Line line{*r.witness_angle, mid};
    CHECK_FALSE(blocks(b, line));
    CHECK(project_polygon(tri, *r.witness_angle).contains(mid));
  }
}

TEST_CASE("adding segments never refutes a certified barrier") {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  std::mt19937_64 rng(29);
  const Barrier bases[] = {make_boundary_barrier(tri), make_steiner_barrier()};
  for (const Barrier& base : bases) {
    for (int i = 0; i < 10; ++i) {
      std::vector<Segment> extra;
      for (int j = 0; j < 3; ++j) extra.push_back(test::random_segment(rng));
      const Barrier more = base.concat(Barrier(extra));
      CHECK(is_barrier(more, tri, 180).status != CoverageStatus::refuted);
    }
  }
}

TEST_CASE("certified by sampling implies positive slack") {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  // Boundary plus a second copy of the base, disconnected from it.
  const Barrier b = make_boundary_barrier(tri).concat(
      Barrier(std::vector<Segment>{Segment({-0.5, -0.2}, {1.5, -0.2})}));
  const CoverageReport r = is_barrier(b, tri, 360);
  if (r.status == CoverageStatus::certified && r.method == CertificationMethod::sampling) {
    CHECK(r.min_slack > 0.0);
    CHECK(r.max_spacing <= r.min_slack / (2 * r.radius));
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(make_steiner_barrier()));
  CHECK(is_connected(make_two_sides_barrier()));
  CHECK_FALSE(is_connected(Barrier(std::vector<Segment>{Segment({0, 0}, {1, 0}), Segment({0, 1}, {1, 1})})));
}

TEST_CASE("segment reduction examples") {
  const Segment flat({0, 0}, {1, 0});
  const SegmentReduction r0 = reduce_segment(flat, GridOffset::zero);
  REQUIRE(r0.replacement.size() == 1);
  CHECK(r0.replacement.segments()[0] == flat);
  CHECK(r0.length == doctest::Approx(1.0));

  const Segment tilted({0, 0}, {kSqrt3 / 2, 0.5});
  const SegmentReduction r1 = reduce_segment(tilted, GridOffset::zero);
  REQUIRE(r1.replacement.size() == 2);
  const auto segs = r1.replacement.segments();
  CHECK(segs[0].a().x == doctest::Approx(0.0));
  CHECK(segs[0].b().x == doctest::Approx(1 / (2 * kSqrt3)));
  CHECK(segs[0].b().y == doctest::Approx(0.5));
  CHECK(segs[1].b().x == doctest::Approx(kSqrt3 / 2));
  CHECK(segs[1].b().y == doctest::Approx(0.5));
  CHECK(r1.length == doctest::Approx(2 / kSqrt3));

  const Segment vertical({0, 0}, {0, 1});
  CHECK(reduce_segment(vertical, GridOffset::pi6).length == doctest::Approx(1.0));
  CHECK(reduce_segment(vertical, GridOffset::pi6).replacement.size() == 1);
}

TEST_CASE("barrier reduction examples") {
  const Barrier tri = make_boundary_barrier(ConvexPolygon::unit_triangle());
  CHECK(reduce_barrier(tri, GridOffset::zero).total_length() == doctest::Approx(3.0));
  CHECK(reduce_barrier(tri, GridOffset::zero).size() == 3);
  const Barrier o = make_steiner_barrier();
  CHECK(reduce_barrier(o, GridOffset::pi6).total_length() == doctest::Approx(kSqrt3));
  CHECK(reduce_barrier(o, GridOffset::zero).total_length() == doctest::Approx(2.0));
}

TEST_CASE("reduction length law and blocking") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const Segment s = test::random_segment(rng);
    for (GridOffset grid : {GridOffset::zero, GridOffset::pi6}) {
      const SegmentReduction r = reduce_segment(s, grid);
      const double predicted = w_factor(fold_angle(s.angle(), grid)) * s.length();
      CHECK(std::abs(r.length - predicted) <= 1e-12);
      CHECK(std::abs(r.replacement.total_length() - predicted) <= 1e-12);
      for (const Segment& piece : r.replacement.segments()) {
        CHECK(fold_angle(piece.angle(), grid) < 1e-9);
      }
      for (int j = 0; j < 5; ++j) {
        CHECK(blocks(r.replacement, test::random_line_through(s, rng), 1e-9));
      }
    }
  }
}

TEST_CASE("reduction factor symmetry") {
  for (int i = 0; i <= 100; ++i) {
    const double phi = kPi / 3 * i / 100;
    CHECK(std::abs(w_factor(phi) - w_factor(kPi / 3 - phi)) <= 1e-12);
    if (phi <= kPi / 6) CHECK(w_factor(phi) <= 2 / kSqrt3 + 1e-15);
  }
  CHECK(w_factor(0) == 1.0);
  CHECK(w_factor(kPi / 6) == doctest::Approx(2 / kSqrt3));
  CHECK(w_factor(kPi / 3) == doctest::Approx(1.0));
}

TEST_CASE("split by fold") {
  const Barrier tri = make_boundary_barrier(ConvexPolygon::unit_triangle());
  auto [c, d] = split_by_fold(tri, 0.01);
  CHECK(c.size() == 3);
  CHECK(d.empty());
  auto [c2, d2] = split_by_fold(make_steiner_barrier(), 0.01);
  CHECK(c2.empty());
  CHECK(d2.size() == 3);
  const Barrier mixed(std::vector<Segment>{Segment({0, 0}, {1, 0}),
                                           Segment({0, 0}, {std::cos(kPi / 6), std::sin(kPi / 6)})});
  auto [c3, d3] = split_by_fold(mixed, 0.05);
  CHECK(c3.size() == 1);
  CHECK(d3.size() == 1);
  CHECK_THROWS_AS(split_by_fold(tri, -0.1), DomainError);
  CHECK_THROWS_AS(split_by_fold(tri, 1.0), DomainError);
}

}  // TEST_SUITE
