#include <doctest.h>

#include "nonarch/rational.hpp"

using namespace nonarch;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(4, 8).str() == "1/2");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(4, -8).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).denominator() == 1);
}

TEST_CASE("parse round trip") {
    CHECK(Rational::parse("22/7").str() == "22/7");
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half - third).str() == "1/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half / third).str() == "3/2");
    CHECK_THROWS_AS(half / Rational(0), Error);
    CHECK(-half == Rational(-1, 2));
}

TEST_CASE("order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("powers and roots") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), Error);

    CHECK(Rational(4, 9).nth_root(2).value() == Rational(2, 3));
    CHECK(Rational(8, 27).nth_root(3).value() == Rational(2, 3));
    CHECK_FALSE(Rational(2).nth_root(2).has_value());
    CHECK_FALSE(Rational(-4).nth_root(2).has_value());
    CHECK(Rational(-8).nth_root(3).value() == Rational(-2));
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4).floor() == 4);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial_int(7, 3) == 35);
    CHECK(binomial_general(Rational(7), 3) == Rational(35));
    // C(-1/2, k): 1, -1/2, 3/8, -5/16, 35/128
    CHECK(binomial_general(Rational(-1, 2), 0) == Rational(1));
    CHECK(binomial_general(Rational(-1, 2), 1) == Rational(-1, 2));
    CHECK(binomial_general(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(binomial_general(Rational(-1, 2), 3) == Rational(-5, 16));
    CHECK(binomial_general(Rational(-1, 2), 4) == Rational(35, 128));
}

}
