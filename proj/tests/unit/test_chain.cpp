#include <doctest.h>

#include "opaque/error.hpp"
#include "opaque/inequality_chain.hpp"

using namespace opaque;

TEST_SUITE("chain") {

TEST_CASE("right corner chain") {
  const ChainSum s = replay_chain(chains::right_corner());
  CHECK(s.constant == Rational(85, 14));
  const FactoredSum f = factor_total_length(s, chains::kClasses);
  CHECK(f.total_length_coefficient == Rational(4));
  CHECK(f.remainder.size() == 1);
  CHECK(f.remainder.at("X1") == Rational(1));
}

TEST_CASE("left corner chain") {
  const ChainSum s = replay_chain(chains::left_corner());
  CHECK(s.constant == Rational(23, 7));
  const FactoredSum f = factor_total_length(s, chains::kClasses);
  CHECK(f.total_length_coefficient == Rational(2));
  CHECK(f.remainder.at("B0") == Rational(1, 2));
  CHECK(f.remainder.at("X2") == Rational(1));
  CHECK(f.remainder.size() == 2);
}

TEST_CASE("empty chain") {
  const ChainSum s = replay_chain({});
  CHECK(s.constant == Rational(0));
  CHECK(s.combo.empty());
}

TEST_CASE("cancelling terms drop out") {
  InequalityChain c;
  c.symbols = {"a", "b"};
  c.terms.push_back({Rational(1), "t1", Rational(1, 3), {{"a", Rational(1)}, {"b", Rational(2)}}});
  c.terms.push_back({Rational(2), "t2", Rational(1, 6), {{"a", Rational(-1, 2)}}});
  const ChainSum s = replay_chain(c);
  CHECK(s.constant == Rational(2, 3));
  CHECK(s.combo.size() == 1);
  CHECK(s.combo.at("b") == Rational(2));
}

TEST_CASE("undeclared symbols are rejected") {
  InequalityChain c;
  c.symbols = {"a"};
  c.terms.push_back({Rational(1), "t", Rational(0), {{"z", Rational(1)}}});
  CHECK_THROWS_AS(replay_chain(c), DomainError);
}

}  // TEST_SUITE
