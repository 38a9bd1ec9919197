#include <doctest.h>

#include "nonarch/field.hpp"
#include "nonarch/laws.hpp"
#include "nonarch/power_series.hpp"
#include "nonarch/star.hpp"

using namespace nonarch;

namespace {
constexpr std::uint64_t kSeed = 20260809;
}

TEST_SUITE("properties") {

TEST_CASE_TEMPLATE("ordered-field axioms on sampled triples", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed);
    for (int i = 0; i < 200; ++i) {
        F x = s.sample_mixed(), y = s.sample_mixed(), z = s.sample_mixed();
        // ring laws, exact
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + F() == x);
        CHECK(x * F::from_rational(1) == x);
        CHECK(x - x == F());
        // inverse law through tracked order
        F xi = x.inverse(16);
        F back = x * xi - F::from_rational(1);
        CHECK_FALSE(back.has_terms());
        // order compatibility
        CHECK(x.compare(y) == (x + z).compare(y + z));
        F pos = z.abs();
        if (pos.has_terms()) CHECK(x.compare(y) == (x * pos).compare(y * pos));
    }
}

TEST_CASE_TEMPLATE("closeness is an equivalence relation", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 1);
    for (int i = 0; i < 120; ++i) {
        F x = s.sample_mixed(), y = s.sample_mixed();
        F dx = s.sample(Tag::infinitesimal), dy = s.sample(Tag::infinitesimal);
        CHECK(is_close(x, x));                      // reflexive
        CHECK(is_close(x, y) == is_close(y, x));    // symmetric
        // transitivity probed through infinitesimal perturbations:
        // x ≈ x+dx and x+dx ≈ x+dx+dy force x ≈ x+dx+dy
        CHECK(is_close(x, x + dx));
        CHECK(is_close(x + dx, x + dx + dy));
        CHECK(is_close(x, x + dx + dy));
        if (is_close(x, y)) {
            CHECK(is_close(x + dx, y));
        }
    }
}

TEST_CASE_TEMPLATE("classification is a partition and respects negation", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 2);
    for (int i = 0; i < 150; ++i) {
        for (Tag cls : {Tag::infinitesimal, Tag::appreciable, Tag::infinite}) {
            F x = s.sample(cls);
            Classification c = classify(x);
            CHECK(c.tag == cls);
            Classification cn = classify(-x);
            CHECK(cn.tag == c.tag);
            if (c.shadow) CHECK(cn.shadow.value() == -c.shadow.value());
        }
    }
    CHECK(classify(F()).tag == Tag::zero);
}

TEST_CASE_TEMPLATE("rational embedding is an order-preserving homomorphism", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 3);
    for (int i = 0; i < 150; ++i) {
        Rational a = s.nonzero_rational(9), b = s.nonzero_rational(9);
        CHECK(F::from_rational(a) + F::from_rational(b) == F::from_rational(a + b));
        CHECK(F::from_rational(a) * F::from_rational(b) == F::from_rational(a * b));
        CHECK((F::from_rational(a).compare(F::from_rational(b)) == std::strong_ordering::less) == (a < b));
        Classification c = classify(F::from_rational(a));
        CHECK(c.tag == Tag::appreciable);
        CHECK(c.shadow.value() == a);
    }
}

TEST_CASE_TEMPLATE("shadow is additive and multiplicative where defined", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 4);
    for (int i = 0; i < 150; ++i) {
        F x = s.pick(0, 1) ? s.sample(Tag::appreciable) : s.sample(Tag::infinitesimal);
        F y = s.pick(0, 1) ? s.sample(Tag::appreciable) : s.sample(Tag::infinitesimal);
        CHECK(shadow(x + y) == shadow(x) + shadow(y));
        CHECK(shadow(x * y) == shadow(x) * shadow(y));
        // invariance under infinitesimal perturbation
        CHECK(shadow(x + s.sample(Tag::infinitesimal)) == shadow(x));
    }
}

TEST_CASE_TEMPLATE("multiply-back for inverses and roots", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 5);
    for (int i = 0; i < 100; ++i) {
        F x = s.sample_mixed();
        F residue = x.inverse(12) * x - F::from_rational(1);
        CHECK_FALSE(residue.has_terms());
        CHECK(residue.omega_status() == Cert::yes);

        // perfect squares always admit a square root
        F sq = x * x;
        F r = sq.abs().root(2, 12);
        F back = r * r - sq.abs();
        CHECK_FALSE(back.has_terms());
    }
}

TEST_CASE("lc multiply-back residues sit beyond K times the tail gap") {
    Sampler<LcNumber> s(kSeed + 6);
    for (int i = 0; i < 100; ++i) {
        LcNumber x = s.sample_mixed();
        if (x.terms().size() < 2) continue;
        int depth = 8;
        LcNumber inv = x.inverse(depth);
        LcNumber residue = inv * x - LcNumber::from_rational(1);
        REQUIRE(residue.truncation_order().has_value());
        Rational gap = x.terms()[1].first - x.terms()[0].first;
        CHECK(*residue.truncation_order() > gap * Rational(depth));
    }
}

TEST_CASE("sequence order verdicts agree with exact pointwise evaluation") {
    Sampler<GrowthNumber> s(kSeed + 7);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        GrowthNumber x = s.sample_mixed(), y = s.sample_mixed();
        auto verdict = x.compare(y);
        GrowthNumber d = x - y;
        if (!d.has_terms()) {
            CHECK(verdict == std::strong_ordering::equal);
            continue;
        }
        // executable sign certificate: beyond n0 the leading monomial dominates
        const GrowthMonomial& lead = d.leading();
        GrowthNumber tail_ratio = (d - GrowthNumber::monomial(lead.coeff, lead.sig, lead.alternating)) *
                                  GrowthNumber::monomial(lead.coeff.inverse(), -lead.sig);
        unsigned long n0 = tail_ratio.is_exact_zero() ? 1 : tail_ratio.null_certificate(2);
        for (unsigned long n : {n0, n0 + 1, n0 + 7, n0 + 100, 10000ul}) {
            if (n < n0) continue;
            Rational value = d.eval(n);
            if (verdict == std::strong_ordering::less) CHECK(value.sign() < 0);
            if (verdict == std::strong_ordering::greater) CHECK(value.sign() > 0);
        }
        ++checked;
    }
    CHECK(checked > 150);  // most sampled pairs are strictly ordered
}

TEST_CASE_TEMPLATE("star identities on sampled infinitesimals", F, LcNumber, GrowthNumber) {
    Sampler<F> s(kSeed + 8);
    for (int i = 0; i < 60; ++i) {
        F d = s.sample(Tag::infinitesimal);
        CHECK(is_close(star_apply(StarFn::sin, d, 6), d));
        CHECK(is_close(star_apply(StarFn::cos, d, 6), F::from_rational(1)));
        CHECK(pythagorean_check(d, 6));
    }
}

TEST_CASE("power-series reversion and division round trips on random series") {
    Sampler<LcNumber> s(kSeed + 9);  // reuse the rational stream
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> coeffs{Rational(0), s.nonzero_rational()};
        for (int j = 2; j <= 8; ++j)
            coeffs.push_back(s.pick(0, 2) ? s.nonzero_rational() : Rational(0));
        PowerSeries f(coeffs);
        CHECK(f.revert().revert() == f);
        CHECK(f.compose(f.revert()) == PowerSeries::identity(8));

        std::vector<Rational> dc{s.nonzero_rational()};
        for (int j = 1; j <= 8; ++j) dc.push_back(s.pick(0, 2) ? s.nonzero_rational() : Rational(0));
        PowerSeries g(dc);
        CHECK(g * (PowerSeries::constant(1, 8) / g) == PowerSeries::constant(1, 8));
    }
}

TEST_CASE("filter-style stability: verdicts survive intersecting certificates") {
    Sampler<GrowthNumber> s(kSeed + 10);
    for (int i = 0; i < 50; ++i) {
        GrowthNumber a = s.sample(Tag::infinitesimal);
        GrowthNumber b = s.sample(Tag::infinitesimal);
        unsigned long na = a.null_certificate(7);
        unsigned long nb = b.null_certificate(7);
        unsigned long both = std::max(na, nb);
        for (unsigned long n : {both, both + 3}) {
            CHECK(a.eval(n).abs() < Rational(1, 7));
            CHECK(b.eval(n).abs() < Rational(1, 7));
        }
    }
}

}
