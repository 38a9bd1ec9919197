#include <doctest.h>

#include "nonarch/laws.hpp"

using namespace nonarch;

TEST_SUITE("laws") {

TEST_CASE("registry has the twelve laws") {
    const auto& reg = law_registry();
    CHECK(reg.size() == 12);
    CHECK(reg.front() == "omega-add-closure");
    CHECK(reg.back() == "product-trichotomy");
}

TEST_CASE_TEMPLATE("samplers hit the requested class", F, LcNumber, GrowthNumber) {
    Sampler<F> s(42);
    for (int i = 0; i < 50; ++i) {
        CHECK(s.sample(Tag::infinitesimal).classify().tag == Tag::infinitesimal);
        CHECK(s.sample(Tag::appreciable).classify().tag == Tag::appreciable);
        CHECK(s.sample(Tag::infinite).classify().tag == Tag::infinite);
    }
}

TEST_CASE_TEMPLATE("samplers are seed-deterministic", F, LcNumber, GrowthNumber) {
    Sampler<F> a(7), b(7), c(8);
    bool saw_difference = false;
    for (int i = 0; i < 20; ++i) {
        F xa = a.sample_mixed(), xb = b.sample_mixed(), xc = c.sample_mixed();
        CHECK(xa == xb);
        if (!(xa == xc)) saw_difference = true;
    }
    CHECK(saw_difference);
}

TEST_CASE_TEMPLATE("every registry law passes 100 seeded trials", F, LcNumber, GrowthNumber) {
    for (const auto& id : law_registry()) {
        LawReport r = run_law<F>(id, 1, 100, 16);
        INFO(r.line());
        if (!r.failures.empty()) INFO("first failure: ", r.failures.front());
        CHECK(r.passed());
        CHECK(r.successes == 100);
        CHECK(r.inconclusive == 0);
    }
}

TEST_CASE("existence laws record re-verified witnesses") {
    LawReport psi = run_law<LcNumber>("psi-solvability", 1, 10, 16);
    REQUIRE_FALSE(psi.witnesses.empty());
    CHECK(psi.witnesses.front().find("z = ") != std::string::npos);

    LawReport na = run_law<GrowthNumber>("non-archimedean-witness", 3, 10, 16);
    REQUIRE_FALSE(na.witnesses.empty());
    CHECK(na.witnesses.front().find("ε = ") != std::string::npos);

    LawReport grades = run_law<LcNumber>("grades-of-infinity", 5, 5, 16);
    REQUIRE_FALSE(grades.witnesses.empty());
    CHECK(grades.witnesses.front().find(" < ") != std::string::npos);

    LawReport prod = run_law<GrowthNumber>("product-trichotomy", 5, 5, 16);
    REQUIRE_FALSE(prod.witnesses.empty());
    CHECK(prod.witnesses.front().find("Infinitesimal") != std::string::npos);
}

TEST_CASE("report rendering") {
    LawReport r = run_law<LcNumber>("omega-mul-closure", 9, 25, 16);
    CHECK(r.line() == "LAW omega-mul-closure [lc] 25/25 PASS");
    CHECK(r.to_json().find("\"passed\": true") != std::string::npos);
    CHECK_THROWS_AS(run_law<LcNumber>("no-such-law", 1, 1, 16), Error);
}

TEST_CASE("the canonical product-trichotomy triple") {
    // (1/ε)·ε = 1, (1/ε)·ε² = ε, (1/ε²)·ε = 1/ε
    LcNumber eps = LcNumber::eps();
    LcNumber inv = eps.inverse(16);
    CHECK(classify(inv * eps).tag == Tag::appreciable);
    CHECK(classify(inv * (eps * eps)).tag == Tag::infinitesimal);
    CHECK(classify((eps * eps).inverse(16) * eps).tag == Tag::infinite);
}

}
