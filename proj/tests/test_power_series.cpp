#include <doctest.h>

#include "nonarch/power_series.hpp"

using namespace nonarch;

namespace {
PowerSeries ps(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return PowerSeries(std::move(c));
}
}  // namespace

TEST_SUITE("power-series") {

TEST_CASE("ring arithmetic") {
    PowerSeries one_plus = ps({1, 1, 0, 0, 0});
    PowerSeries one_minus = ps({1, -1, 0, 0, 0});
    PowerSeries prod = one_plus * one_minus;
    CHECK(prod == ps({1, 0, -1, 0, 0}));

    // 1/(1−x) = 1 + x + x² + x³ + x⁴
    PowerSeries geo = PowerSeries::constant(1, 4) / one_minus;
    CHECK(geo == ps({1, 1, 1, 1, 1}));

    PowerSeries s = PowerSeries::taylor(TaylorName::sin, 8);
    PowerSeries c = PowerSeries::taylor(TaylorName::cos, 8);
    CHECK(s * s + c * c == PowerSeries::constant(1, 8));

    CHECK_THROWS_AS(one_plus / PowerSeries(4), Error);
    CHECK_THROWS_AS(one_plus / PowerSeries::identity(4), Error);
}

TEST_CASE("taylor generators") {
    PowerSeries arcsin7 = PowerSeries::taylor(TaylorName::arcsin, 7);
    CHECK(arcsin7.coeff(1) == Rational(1));
    CHECK(arcsin7.coeff(3) == Rational(1, 6));
    CHECK(arcsin7.coeff(5) == Rational(3, 40));
    CHECK(arcsin7.coeff(7) == Rational(5, 112));

    PowerSeries cos6 = PowerSeries::taylor(TaylorName::cos, 6);
    CHECK(cos6.coeff(0) == Rational(1));
    CHECK(cos6.coeff(2) == Rational(-1, 2));
    CHECK(cos6.coeff(4) == Rational(1, 24));
    CHECK(cos6.coeff(6) == Rational(-1, 720));

    PowerSeries binom = PowerSeries::binomial_series(Rational(-1, 2), 4);
    CHECK(binom.coeff(0) == Rational(1));
    CHECK(binom.coeff(1) == Rational(-1, 2));
    CHECK(binom.coeff(2) == Rational(3, 8));
    CHECK(binom.coeff(3) == Rational(-5, 16));
    CHECK(binom.coeff(4) == Rational(35, 128));

    CHECK_THROWS_AS(PowerSeries::taylor("sinh", 4), Error);
}

TEST_CASE("composition") {
    PowerSeries expf = PowerSeries::taylor(TaylorName::exp, 6);
    PowerSeries neg_x = PowerSeries::identity(6).scaled(Rational(-1));
    PowerSeries em = expf.compose(neg_x);
    for (long k = 0; k <= 6; ++k) {
        Rational expect = Rational(1) / Rational(factorial(k));
        if (k % 2 == 1) expect = -expect;
        CHECK(em.coeff(k) == expect);
    }

    // sin ∘ arcsin = identity through degree 7
    PowerSeries sin7 = PowerSeries::taylor(TaylorName::sin, 7);
    PowerSeries arcsin7 = PowerSeries::taylor(TaylorName::arcsin, 7);
    CHECK(sin7.compose(arcsin7) == PowerSeries::identity(7));

    // composing with 0 leaves the constant term
    CHECK(expf.compose(PowerSeries(6)) == PowerSeries::constant(1, 6));

    CHECK_THROWS_AS(expf.compose(PowerSeries::constant(1, 6)), Error);
}

TEST_CASE("exp functional equation") {
    PowerSeries expf = PowerSeries::taylor(TaylorName::exp, 9);
    PowerSeries em = expf.compose(PowerSeries::identity(9).scaled(Rational(-1)));
    CHECK(expf * em == PowerSeries::constant(1, 9));
    // exp(log1p) = 1 + x
    PowerSeries lg = PowerSeries::taylor(TaylorName::log1p, 9);
    PowerSeries composed = expf.compose(lg);
    CHECK(composed == ps({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("reversion: the classical arc-to-sine inversion") {
    PowerSeries arc = PowerSeries::taylor(TaylorName::arcsin, 7);
    PowerSeries sine = arc.revert();
    CHECK(sine.coeff(1) == Rational(1));
    CHECK(sine.coeff(3) == Rational(-1, 6));
    CHECK(sine.coeff(5) == Rational(1, 120));
    CHECK(sine.coeff(7) == Rational(-1, 5040));

    CHECK(PowerSeries::identity(5).revert() == PowerSeries::identity(5));
    CHECK(PowerSeries::identity(5).scaled(Rational(2)).revert() ==
          PowerSeries::identity(5).scaled(Rational(1, 2)));

    CHECK_THROWS_AS(PowerSeries::constant(1, 5).revert(), Error);
    CHECK_THROWS_AS(ps({0, 0, 1}).revert(), Error);
}

TEST_CASE("reversion round trip") {
    // randomish revertible series with mixed rational coefficients
    std::vector<PowerSeries> cases = {
        ps({0, 1, 5, -3, 7, 2, 0, 1, -4}),
        PowerSeries({Rational(0), Rational(2, 3), Rational(-1, 7), Rational(5, 2), Rational(1, 11),
                     Rational(0), Rational(3), Rational(-8, 5), Rational(1, 2)}),
        PowerSeries::taylor(TaylorName::sin, 9),
        PowerSeries::taylor(TaylorName::atanh, 9),
    };
    for (const auto& f : cases) {
        CHECK(f.revert().revert() == f);
        CHECK(f.compose(f.revert()) == PowerSeries::identity(f.order()));
    }
}

TEST_CASE("multiplicative inverse round trip") {
    PowerSeries f = PowerSeries({Rational(3), Rational(1, 2), Rational(-2), Rational(7, 3), Rational(1)});
    PowerSeries inv = PowerSeries::constant(1, 4) / f;
    CHECK(f * inv == PowerSeries::constant(1, 4));
}

TEST_CASE("termwise integration with a half-power offset") {
    // x^{-1/2}·(1/2 + x/4 + 3x²/16 + 5x³/32) integrates to
    // x^{1/2}·(1 + x/6 + 3x²/40 + 5x³/112)
    PowerSeries f({Rational(1, 2), Rational(1, 4), Rational(3, 16), Rational(5, 32)}, Rational(-1, 2));
    PowerSeries g = f.integrate();
    CHECK(g.offset() == Rational(1, 2));
    CHECK(g.coeff(0) == Rational(1));
    CHECK(g.coeff(1) == Rational(1, 6));
    CHECK(g.coeff(2) == Rational(3, 40));
    CHECK(g.coeff(3) == Rational(5, 112));

    CHECK(PowerSeries::constant(1, 3).integrate() == PowerSeries({Rational(1), Rational(0), Rational(0), Rational(0)}, Rational(1)));

    // calculus identity: ∫cos = sin, exactly, coefficient by coefficient
    PowerSeries cos6 = PowerSeries::taylor(TaylorName::cos, 6);
    PowerSeries integrated = cos6.integrate();
    PowerSeries sin7 = PowerSeries::taylor(TaylorName::sin, 7);
    for (long i = 0; i <= 6; ++i) CHECK(integrated.coeff(i) == sin7.coeff(i + 1));

    // a 1/x term has no power-series antiderivative
    PowerSeries bad({Rational(1)}, Rational(-1));
    CHECK_THROWS_AS(bad.integrate(), Error);
}

TEST_CASE("offset discipline") {
    PowerSeries half({Rational(1)}, Rational(1, 2));
    CHECK_THROWS_AS(half + PowerSeries::constant(1, 0), Error);
    CHECK((half * half).offset() == Rational(1));
    CHECK_THROWS_AS(half.compose(PowerSeries::identity(3)), Error);
}

TEST_CASE("printing") {
    CHECK(PowerSeries::taylor(TaylorName::cos, 4).str() == "1 − 1/2·x^2 + 1/24·x^4");
    PowerSeries g({Rational(1), Rational(1, 6)}, Rational(1, 2));
    CHECK(g.str() == "x^(1/2)·(1 + 1/6·x)");
    CHECK(PowerSeries(3).str() == "0");
}

}
