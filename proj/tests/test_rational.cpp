#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiblab/rational.hpp"

using fiblab::Rational;

TEST_CASE("construction canonicalizes") {
    Rational r(mpz_class(6), mpz_class(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(mpz_class(0), mpz_class(7)) == Rational(0));
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), std::invalid_argument);
}

TEST_CASE("from_string") {
    CHECK(Rational::from_string("22/7").num() == 22);
    CHECK(Rational::from_string("-10/4") == Rational(mpz_class(-5), mpz_class(2)));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("field operations") {
    Rational a(3, 4), b(5, 6);
    CHECK(a + b == Rational(19, 12));
    CHECK(a - b == Rational(-1, 12));
    CHECK(a * b == Rational(5, 8));
    CHECK(a / b == Rational(9, 10));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(-a == Rational(-3, 4));
    CHECK(a.inverse() == Rational(4, 3));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("floor and frac") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6).floor() == 6);
    CHECK(Rational(-6).floor() == -6);
    CHECK(Rational(7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-1, 3).frac() == Rational(2, 3));
}

TEST_CASE("decimal rendering rounds half up") {
    CHECK(Rational(1, 3).decimal_string(6) == "0.333333");
    CHECK(Rational(2, 3).decimal_string(6) == "0.666667");
    CHECK(Rational(1, 2).decimal_string(0) == "1");
    CHECK(Rational(1, 4).decimal_string(1) == "0.3");  // 0.25 -> 0.3 at the tie
    CHECK(Rational(-1, 4).decimal_string(1) == "-0.2");  // toward +inf at the tie
    CHECK(Rational(5).decimal_string(3) == "5.000");
    CHECK(Rational(-22, 7).decimal_string(4) == "-3.1429");
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}
