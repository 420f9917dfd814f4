#include <doctest.h>

#include "opaque/bounds.hpp"
#include "opaque/certificate.hpp"
#include "opaque/error.hpp"
#include "opaque/final_bound.hpp"

using namespace opaque;

TEST_SUITE("certificate") {

TEST_CASE("json round trip") {
  BoundCertificate c;
  c.name = "weighted_ratio";
  c.value = 0.1;
  c.parameters = {{"c", 1e4}, {"x", -3.25}};
  c.depends_on = {"jones.unit_triangle"};
  c.tolerance = 1e-9;
  const auto back = certificates_from_json(certificate_to_json(c));
  REQUIRE(back.size() == 1);
  CHECK(back[0].name == c.name);
  CHECK(back[0].value == c.value);
  CHECK(back[0].parameters == c.parameters);
  CHECK(back[0].depends_on == c.depends_on);
  CHECK(back[0].tolerance == c.tolerance);
  CHECK(certificates_to_json(back) == certificates_to_json({c}));
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(certificates_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificates_from_json(R"({"value": 1})"), ParseError);
  CHECK_THROWS_AS(certificates_from_json(R"(3)"), ParseError);
}

TEST_CASE("theorem chain") {
  const auto chain = final_theorem_certificates(default_l3());
  REQUIRE(chain.size() == 6);
  CHECK(chain.front().name == "jones.unit_triangle");
  CHECK(chain.back().name == "final_theorem");
  CHECK(chain.back().value >= 1.5 + 5e-13);
  CHECK_NOTHROW(check_acyclic(chain));
  // Every dependency precedes its user.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (const std::string& dep : chain[i].depends_on) {
      bool seen = false;
      for (std::size_t j = 0; j < i; ++j) seen = seen || chain[j].name == dep;
      CHECK(seen);
    }
  }
  for (const BoundCertificate& c : certificates_from_json(certificates_to_json(chain))) {
    const CertificateCheck chk = recheck_certificate(c);
    CAPTURE(c.name);
    CHECK(chk.known);
    CHECK(chk.passed);
  }
}

TEST_CASE("tampering is detected") {
  auto chain = final_theorem_certificates(default_l3());
  for (BoundCertificate& c : chain) {
    c.value += 1e-3;
    CAPTURE(c.name);
    CHECK_FALSE(recheck_certificate(c).passed);
  }
  BoundCertificate unknown;
  unknown.name = "something.else";
  CHECK_FALSE(recheck_certificate(unknown).known);
}

TEST_CASE("cycles are rejected") {
  BoundCertificate a, b;
  a.name = "a";
  b.name = "b";
  a.depends_on = {"b"};
  b.depends_on = {"a", "outside"};
  CHECK_THROWS_AS(check_acyclic({a, b}), DomainError);
  b.depends_on = {"outside"};
  CHECK_NOTHROW(check_acyclic({a, b}));
}

}  // TEST_SUITE
