#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulermat/rational.hpp"

using eulermat::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0L));
    CHECK(Rational(0, -7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-3/4").str() == "-3/4");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("-0").str() == "0");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("arithmetic") {
    Rational a(1, 6), b(1, 3);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(-1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(1, 2));
    CHECK(-b == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0L), std::domain_error);
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("predicates and parts") {
    Rational r(-6, 8);
    CHECK(r.sign() == -1);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(!r.is_integer());
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(0L).is_zero());
    CHECK(Rational(3, 3).is_one());
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1L));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2L).pow(3) == Rational(-8L));
    CHECK_THROWS(Rational(0L).pow(-1));
    CHECK(Rational::pow2(5) == Rational(32L));
    CHECK(Rational::pow2(0) == Rational(1L));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
}

TEST_CASE("large values stay exact") {
    Rational r(1L);
    for (int i = 1; i <= 40; ++i) r *= Rational(i);
    // 40! has 48 digits; any floating intermediate would have lost them.
    CHECK(r.str() == "815915283247897734345611269596115894272000000000");
    CHECK(r / r == Rational(1L));
}
