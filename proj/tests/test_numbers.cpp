#include "spinunitary/errors.hpp"
#include "spinunitary/numbers.hpp"

#include <doctest.h>

using namespace spinunitary;

TEST_CASE("half integers stay exact") {
    HalfInt a = half(3), b = half(-1);
    CHECK((a + b) == HalfInt(1));
    CHECK((a - b) == HalfInt(2));
    CHECK(-a == half(-3));
    CHECK(a.is_strict_half());
    CHECK(HalfInt(4).is_integral());
    CHECK(b < a);
    CHECK(a.to_rational() == Rational(3, 2));
    CHECK(HalfInt::from_rational(Rational(-5, 2)) == half(-5));
    CHECK_THROWS_AS(HalfInt::from_rational(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("formatting and parsing") {
    CHECK(format(Rational(-3, 2)) == "-3/2");
    CHECK(format(Rational(4)) == "4");
    CHECK(format(HalfIntVec{half(1), HalfInt(-2)}) == "(1/2, -2)");
    CHECK(parse_rational(" -7/2 ") == Rational(-7, 2));
    CHECK(parse_rational("+3") == Rational(3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("floor and integrality") {
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(floor_of(Rational(7, 2)) == 3);
    CHECK(floor_of(Rational(-4)) == -4);
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(1, 4)));
    CHECK(abs_of(Rational(-1, 4)) == Rational(1, 4));
}
