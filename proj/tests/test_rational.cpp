#include <doctest.h>

#include "toricap/errors.hpp"
#include "toricap/rational.hpp"

using toricap::BigInt;
using toricap::InputError;
using toricap::Rational;
using toricap::to_decimal;

TEST_CASE("construction canonicalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 6) == Rational(-1, 3));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2).num() == 1);
    CHECK(Rational(1, 2).den() == 2);
    CHECK(Rational(3, -9).num() == -1);
    CHECK(Rational(3, -9).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
    const Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(3 * half == Rational(3, 2));
    CHECK(half + 1 == Rational(3, 2));
    CHECK_THROWS_AS(half / Rational(0), InputError);

    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == 1);

    // A sum that floating point famously cannot represent.
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("comparisons order by value") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > 2);
    CHECK(Rational(4, 2) == 2);
    CHECK(Rational(2, 9) <= Rational(2, 9));
    CHECK(Rational(2, 9) != Rational(1, 5));
}

TEST_CASE("parse accepts p, p/q and surrounding whitespace") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-2/6") == Rational(-1, 3));
    CHECK(Rational::parse("7") == 7);
    CHECK(Rational::parse("+7") == 7);
    CHECK(Rational::parse(" 2/9 ") == Rational(2, 9));
    CHECK(Rational::parse("1/-2") == Rational(-1, 2));
    CHECK(Rational::parse("123456789012345678901234567890") ==
          Rational(BigInt("123456789012345678901234567890")));
}

TEST_CASE("parse rejects anything that is not an exact rational") {
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("  "), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rational::parse("1e3"), InputError);
    CHECK_THROWS_AS(Rational::parse("a"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
    CHECK_THROWS_AS(Rational::parse("/2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), InputError);
}

TEST_CASE("str round-trips through parse") {
    for (const Rational& r : {Rational(2, 9), Rational(-17, 6), Rational(5), Rational(0)}) {
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational(2, 9).str() == "2/9");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("floor and ceil round toward the correct infinities") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 2).floor() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("sign, is_zero, abs, min, max") {
    CHECK(Rational(2, 9).sign() == 1);
    CHECK(Rational(-2, 9).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 1000).is_zero());
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(abs(Rational(5, 3)) == Rational(5, 3));
    CHECK(min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("decimal rendering is presentation-only and rounds half away from zero") {
    CHECK(to_decimal(Rational(2, 9), 6) == "0.222222");
    CHECK(to_decimal(Rational(1, 2), 0) == "1");  // 0.5 rounds up
    CHECK(to_decimal(Rational(-1, 2), 0) == "-1");
    CHECK(to_decimal(Rational(1, 4), 1) == "0.3");
    CHECK(to_decimal(Rational(17, 6), 4) == "2.8333");
    CHECK(to_decimal(Rational(-17, 6), 4) == "-2.8333");
    CHECK(to_decimal(Rational(5), 2) == "5.00");
    CHECK(to_decimal(Rational(0), 3) == "0.000");
    CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");  // rounds to zero: no sign
    CHECK_THROWS_AS(to_decimal(Rational(1), -1), InputError);
}
