#include <doctest.h>

#include "trivar/errors.hpp"
#include "trivar/rational.hpp"

using trivar::Rational;

TEST_CASE("rational construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-4/8") == Rational(-1, 2));
    CHECK(Rational::from_string("+2") == Rational(2));
    CHECK(Rational::from_string("7").str() == "7");
    CHECK(Rational::from_string("0/5") == Rational(0));
    CHECK_THROWS_AS(Rational::from_string("1/0"), trivar::ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), trivar::ParseError);
    CHECK_THROWS_AS(Rational::from_string("a/b"), trivar::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/"), trivar::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1 / 2"), trivar::ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 2);
    const Rational b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK((-a).str() == "-1/2");
    CHECK(a.reciprocal().str() == "2");
    CHECK_THROWS_AS(Rational(0).reciprocal(), trivar::DivisionByZero);
    CHECK_THROWS_AS(a / Rational(0), trivar::DivisionByZero);

    // A denominator collision that overflows doubles stays exact here.
    Rational big(1);
    for (int i = 0; i < 40; ++i) big = big * Rational(1000000007);
    CHECK(big * Rational(1) / big == Rational(1));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(5).abs() == Rational(5));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
}
