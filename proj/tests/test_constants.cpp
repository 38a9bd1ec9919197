#include <doctest.h>

#include "nonarch/constants.hpp"

using namespace nonarch;

TEST_SUITE("constants") {

TEST_CASE("e to 23 places") {
    DecimalWitness w = constant_e(23);
    CHECK(w.digits == "2.71828182845904523536028");
    CHECK(w.lo <= w.hi);
}

TEST_CASE("pi digits") {
    CHECK(constant_pi(10).digits == "3.1415926535");
    // the first 40 significant digits of the classical expansion
    DecimalWitness w = constant_pi(40);
    CHECK(w.digits.substr(0, 41) == "3.141592653589793238462643383279502884197");
    CHECK(w.digits == "3.1415926535897932384626433832795028841971");
}

TEST_CASE("ln 10") {
    CHECK(constant_ln10(6).digits == "2.302585");
    CHECK(constant_ln10(5).digits == "2.30258");
}

TEST_CASE("bracket invariants") {
    for (unsigned d : {3u, 12u, 30u}) {
        DecimalWitness w = constant_e(d);
        CHECK(w.lo <= w.hi);
        // width below one unit in the last certified place
        CHECK(w.hi - w.lo < Rational(10).pow(-static_cast<long>(d)));
    }
}

TEST_CASE("the base-10 logarithm of 1000001/1000000") {
    DecimalWitness w = log10_ratio_million(11);
    CHECK(w.digits == "0.00000043429");
}

TEST_CASE("name dispatch and the digit cap") {
    CHECK(constant_by_name("e", 3).digits == "2.718");
    CHECK_THROWS_AS(constant_by_name("tau", 3), Error);
    CHECK_THROWS_AS(constant_e(201), Error);
    CHECK(constant_e(200).digits.size() == 202);
}

}
