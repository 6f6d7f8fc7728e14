#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgs/rational.hpp"

using namespace hopfgs;

TEST_CASE("rational printing is canonical") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-1) / 2) == "-1/2");
  CHECK(to_string(Rational(4) / 6) == "2/3");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/2") == Rational(-1) / 2);
  CHECK(parse_rational("4/6") == Rational(2) / 3);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("integer square roots") {
  CHECK(exact_sqrt(BigInt(49)).value() == 7);
  CHECK(exact_sqrt(BigInt(0)).value() == 0);
  CHECK(exact_sqrt(BigInt(1)).value() == 1);
  CHECK(!exact_sqrt(BigInt(50)).has_value());
  CHECK(!exact_sqrt(BigInt(2)).has_value());
  BigInt big = BigInt("123456789123456789");
  BigInt square = big * big;
  CHECK(exact_sqrt(square).value() == big);
  BigInt off = square + 1;
  CHECK(!exact_sqrt(off).has_value());
}

TEST_CASE("rational square roots") {
  CHECK(exact_sqrt(Rational(9) / 4).value() == Rational(3) / 2);
  CHECK(exact_sqrt(Rational(4)).value() == 2);
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(!exact_sqrt(Rational(1) / 3).has_value());
  CHECK(exact_sqrt(Rational(0)).value() == 0);
}
