#include <catch2/catch_amalgamated.hpp>

#include "dncg/extended.hpp"
#include "dncg/rational.hpp"

using namespace dncg;

TEST_CASE("extended distance saturates and orders correctly") {
  const ExtDistance inf = ExtDistance::infinite();
  const ExtDistance three = ExtDistance::of(3);
  CHECK(three < inf);
  CHECK(inf == inf);
  CHECK((three + inf).is_infinite());
  CHECK((inf + inf).is_infinite());
  CHECK((three + ExtDistance::of(4)).value() == 7);
  CHECK(max(three, inf) == inf);
  CHECK(min(three, inf) == three);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK_THROWS_AS(ExtDistance::of(-1), std::invalid_argument);
}

TEST_CASE("rational parsing accepts fractions and rejects decimals") {
  CHECK(parse_rational("3/2") == Rational(BigInt(3), BigInt(2)));
  CHECK(parse_rational("7") == Rational(BigInt(7), BigInt(1)));
  CHECK(parse_rational("-7") == Rational(BigInt(-7), BigInt(1)));
  CHECK(parse_rational("6/4") == Rational(BigInt(3), BigInt(2)));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
}

TEST_CASE("extended cost mirrors the distance semantics") {
  const ExtCost inf = ExtCost::infinite();
  const ExtCost half = ExtCost(parse_rational("1/2"));
  CHECK(half < inf);
  CHECK((half + inf).is_infinite());
  CHECK((half + ExtCost(parse_rational("3/2"))).value() == parse_rational("2"));
  CHECK(ExtCost::of(ExtDistance::of(5)).value() == parse_rational("5"));
  CHECK(ExtCost::of(ExtDistance::infinite()).is_infinite());
  CHECK(to_string(inf) == "inf");
}
