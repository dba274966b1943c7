#include <doctest.h>

#include "pchg/rational.hpp"

using namespace pchg;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(-1, -2) == half);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(-half == Rational(-1, 2));
    CHECK(half < Rational(2, 3));
    CHECK(Rational(-3) < Rational(-2));
}

TEST_CASE("rational text round trip") {
    CHECK(Rational(3).to_string() == "3");
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("3/1") == Rational(3));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("x"), error);
    CHECK_THROWS_AS(Rational::parse("1/0"), error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), error);
}

TEST_CASE("rational powers and helpers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(0) == Rational(1));
    CHECK(Rational(2).pow(-1) == Rational(1, 2));
    CHECK(factorial(4) == Rational(24));
    CHECK(multinomial(3, {1, 2}) == Rational(3));
    CHECK(multinomial(2, {1, 1}) == Rational(2));
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("overflow raises the guard error") {
    Rational big(INT64_MAX / 2, 1);
    bool guarded = false;
    try {
        Rational r = big * big;
        (void)r;
    } catch (const error& e) {
        guarded = e.code() == errc::guard;
    }
    CHECK(guarded);
}
