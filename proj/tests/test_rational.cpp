#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sconn/rational.hpp"

using sconn::Rational;

TEST_CASE("parsing covers integers, decimals and fractions") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("2.1") == Rational(21, 10));
    CHECK(Rational::parse("21/10") == Rational(21, 10));
    CHECK(Rational::parse("0.05") == Rational(1, 20));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("2."));
    CHECK_THROWS(Rational::parse("1.2.3"));
}

TEST_CASE("arithmetic is exact and normalized") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((Rational(2, 4)) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));

    // 0.1 summed ten times is exactly 1; the whole point of rationals here.
    Rational sum;
    for (int i = 0; i < 10; ++i) sum += Rational::parse("0.1");
    CHECK(sum == Rational(1));
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(21, 10) > Rational(2));
    CHECK(Rational(7, 3) == Rational(14, 6));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("formatting: decimal only for power-of-ten denominators") {
    CHECK(Rational(21, 10).decimal_or_fraction() == "2.1");
    CHECK(Rational(3).decimal_or_fraction() == "3");
    CHECK(Rational(1, 2).decimal_or_fraction() == "1/2");
    CHECK(Rational(1, 100).decimal_or_fraction() == "0.01");
    CHECK(Rational(1, 20).decimal_or_fraction() == "1/20");
    CHECK(Rational(21, 10).str() == "21/10");
    CHECK(Rational(-21, 10).decimal_or_fraction() == "-2.1");
}

TEST_CASE("overflow throws instead of wrapping") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), std::overflow_error);
}
