#include "nonarch/laws.hpp"

#include <json.hpp>

namespace nonarch {

std::string LawReport::line() const {
    return "LAW " + law_id + " [" + backend + "] " + std::to_string(successes) + "/" +
           std::to_string(trials) + " " + (passed() ? "PASS" : "FAIL");
}

std::string LawReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["law"] = law_id;
    doc["backend"] = backend;
    doc["trials"] = trials;
    doc["successes"] = successes;
    doc["inconclusive"] = inconclusive;
    doc["failures"] = failures;
    doc["witnesses"] = witnesses;
    doc["passed"] = passed();
    return doc.dump(2);
}

const std::vector<std::string>& law_registry() {
    static const std::vector<std::string> registry = {
        "omega-add-closure",
        "omega-mul-closure",
        "omega-times-appreciable",
        "appreciable-inverse",
        "inverse-duality",
        "psi-solvability",
        "order-translation",
        "order-scaling",
        "trichotomy",
        "non-archimedean-witness",
        "grades-of-infinity",
        "product-trichotomy",
    };
    return registry;
}

template <>
LcNumber Sampler<LcNumber>::sample(Tag cls) {
    // leading exponent fixes the class: > 0 infinitesimal, = 0 appreciable, < 0 infinite
    Rational lead_exp(0);
    if (cls == Tag::infinitesimal) lead_exp = Rational(pick(1, 4), pick(1, 3));
    if (cls == Tag::infinite) lead_exp = Rational(-pick(1, 4), pick(1, 3));
    LcNumber x = LcNumber::monomial(nonzero_rational(), lead_exp);
    long extra = pick(0, 2);
    Rational q = lead_exp;
    for (long i = 0; i < extra; ++i) {
        q = q + Rational(pick(1, 3), pick(1, 2));
        x = x + LcNumber::monomial(nonzero_rational(), q);
    }
    return x;
}

template <>
GrowthNumber Sampler<GrowthNumber>::sample(Tag cls) {
    auto small_sig = [&]() -> Signature {
        switch (pick(0, 2)) {
            case 0: return {0, Rational(1), -pick(1, 3)};
            case 1: return {0, Rational(1, pick(2, 4)), pick(-1, 1)};
            default: return {-1, Rational(pick(1, 3)), pick(-1, 1)};
        }
    };
    Signature lead = Signature::unit();
    if (cls == Tag::infinitesimal) lead = small_sig();
    if (cls == Tag::infinite) lead = -small_sig();
    GrowthNumber x = GrowthNumber::monomial(nonzero_rational(), lead);
    long extra = pick(0, 2);
    Signature s = lead;
    for (long i = 0; i < extra; ++i) {
        s = s + Signature{0, Rational(1), -pick(1, 2)};  // strictly lower tail
        x = x + GrowthNumber::monomial(nonzero_rational(), s);
    }
    return x;
}

namespace {

template <FieldBackend F>
struct TrialContext {
    Sampler<F> sampler;
    int depth;
    std::vector<std::string>* witnesses;
    unsigned long witness_cap;

    void witness(const std::string& w) {
        if (witnesses->size() < witness_cap) witnesses->push_back(w);
    }
};

// Each law returns true (pass) or false (counterexample recorded by caller via
// the returned description).
template <FieldBackend F>
bool trial_omega_add_closure(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::infinitesimal);
    F y = ctx.sampler.sample(Tag::infinitesimal);
    desc = "x = " + x.str() + ", y = " + y.str();
    return classify(x + y).is_omega();
}

template <FieldBackend F>
bool trial_omega_mul_closure(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::infinitesimal);
    F y = ctx.sampler.sample(Tag::infinitesimal);
    desc = "x = " + x.str() + ", y = " + y.str();
    return classify(x * y).is_omega();
}

template <FieldBackend F>
bool trial_omega_times_appreciable(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::infinitesimal);
    F y = ctx.sampler.sample(Tag::appreciable);
    desc = "x = " + x.str() + ", y = " + y.str();
    return classify(x * y).is_omega();
}

template <FieldBackend F>
bool trial_appreciable_inverse(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::appreciable);
    desc = "x = " + x.str();
    return classify(x.inverse(ctx.depth)).tag == Tag::appreciable;
}

template <FieldBackend F>
bool trial_inverse_duality(TrialContext<F>& ctx, std::string& desc) {
    F small = ctx.sampler.sample(Tag::infinitesimal);
    F large = ctx.sampler.sample(Tag::infinite);
    desc = "x = " + small.str() + ", y = " + large.str();
    return classify(small.inverse(ctx.depth)).tag == Tag::infinite &&
           classify(large.inverse(ctx.depth)).tag == Tag::infinitesimal;
}

template <FieldBackend F>
bool trial_psi_solvability(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::infinite);
    F y = ctx.sampler.sample(Tag::appreciable);
    F z = y * x.inverse(ctx.depth);
    desc = "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str();
    // re-verify the witness through field-core operations
    bool z_small = classify(z).tag == Tag::infinitesimal;
    F residue = x * z - y;
    bool product_back = !residue.has_terms() && residue.omega_status() == Cert::yes;
    if (z_small && product_back) ctx.witness(desc);
    return z_small && product_back;
}

template <FieldBackend F>
bool trial_order_translation(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample_mixed();
    F y = ctx.sampler.sample_mixed();
    F z = ctx.sampler.sample_mixed();
    desc = "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str();
    return x.compare(y) == (x + z).compare(y + z);
}

template <FieldBackend F>
bool trial_order_scaling(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample_mixed();
    F y = ctx.sampler.sample_mixed();
    F z = ctx.sampler.sample_mixed().abs();
    if (!z.has_terms()) z = F::eps();
    desc = "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str();
    return x.compare(y) == (x * z).compare(y * z);
}

template <FieldBackend F>
bool trial_trichotomy(TrialContext<F>& ctx, std::string& desc) {
    F x = ctx.sampler.sample(Tag::infinitesimal);
    F y = ctx.sampler.pick(0, 1) ? ctx.sampler.sample(Tag::infinitesimal) : ctx.sampler.sample_mixed();
    desc = "x = " + x.str() + ", y = " + y.str();
    auto forward = x.compare(y);
    auto backward = y.compare(x);
    bool consistent = (forward == std::strong_ordering::equal && backward == std::strong_ordering::equal) ||
                      (forward == std::strong_ordering::less && backward == std::strong_ordering::greater) ||
                      (forward == std::strong_ordering::greater && backward == std::strong_ordering::less);
    return consistent && x.compare(x) == std::strong_ordering::equal;
}

template <FieldBackend F>
bool trial_non_archimedean_witness(TrialContext<F>& ctx, std::string& desc) {
    F eps_w = ctx.sampler.sample(Tag::infinitesimal).abs();
    desc = "ε = " + eps_w.str();
    if (eps_w.is_exact_zero() || classify(eps_w).tag != Tag::infinitesimal) return false;
    for (long n : {1L, 7L, 1000L}) {
        Rational r = ctx.sampler.positive_rational();
        if (eps_w.scaled(Rational(n)).compare(F::from_rational(r)) != std::strong_ordering::less)
            return false;
    }
    ctx.witness(desc);
    return true;
}

template <FieldBackend F>
bool trial_grades_of_infinity(TrialContext<F>& ctx, std::string& desc) {
    F g = ctx.sampler.sample(Tag::infinite).abs();
    F g2 = g * g;
    F g3 = g2 * g;
    desc = "chain: " + g.str() + " < " + g2.str() + " < " + g3.str();
    bool ascending = g.compare(g2) == std::strong_ordering::less &&
                     g2.compare(g3) == std::strong_ordering::less;
    bool ratios_infinite = classify(g2 * g.inverse(ctx.depth)).tag == Tag::infinite &&
                           classify(g3 * g2.inverse(ctx.depth)).tag == Tag::infinite;
    if (ascending && ratios_infinite) ctx.witness(desc);
    return ascending && ratios_infinite;
}

template <FieldBackend F>
bool trial_product_trichotomy(TrialContext<F>& ctx, std::string& desc) {
    F small = ctx.sampler.sample(Tag::infinitesimal).abs();
    F small_sq = small * small;
    F p1 = small.inverse(ctx.depth) * small;
    F p2 = small.inverse(ctx.depth) * small_sq;
    F p3 = small_sq.inverse(ctx.depth) * small;
    desc = "(1/ε)·ε = " + p1.str() + " (" + tag_name(classify(p1).tag) + "), (1/ε)·ε² = " + p2.str() +
           " (" + tag_name(classify(p2).tag) + "), (1/ε²)·ε = " + p3.str() + " (" +
           tag_name(classify(p3).tag) + ")";
    bool ok = classify(p1).tag == Tag::appreciable && classify(p2).tag == Tag::infinitesimal &&
              classify(p3).tag == Tag::infinite;
    if (ok) ctx.witness(desc);
    return ok;
}

}  // namespace

template <FieldBackend F>
LawReport run_law(const std::string& law_id, std::uint64_t seed, unsigned long trials, int depth,
                  bool allow_inconclusive) {
    using TrialFn = bool (*)(TrialContext<F>&, std::string&);
    TrialFn fn = nullptr;
    if (law_id == "omega-add-closure") fn = trial_omega_add_closure<F>;
    else if (law_id == "omega-mul-closure") fn = trial_omega_mul_closure<F>;
    else if (law_id == "omega-times-appreciable") fn = trial_omega_times_appreciable<F>;
    else if (law_id == "appreciable-inverse") fn = trial_appreciable_inverse<F>;
    else if (law_id == "inverse-duality") fn = trial_inverse_duality<F>;
    else if (law_id == "psi-solvability") fn = trial_psi_solvability<F>;
    else if (law_id == "order-translation") fn = trial_order_translation<F>;
    else if (law_id == "order-scaling") fn = trial_order_scaling<F>;
    else if (law_id == "trichotomy") fn = trial_trichotomy<F>;
    else if (law_id == "non-archimedean-witness") fn = trial_non_archimedean_witness<F>;
    else if (law_id == "grades-of-infinity") fn = trial_grades_of_infinity<F>;
    else if (law_id == "product-trichotomy") fn = trial_product_trichotomy<F>;
    else fail(errc::unknown_law, "no law named '" + law_id + "'");

    LawReport report;
    report.law_id = law_id;
    report.backend = F::backend_name();
    report.trials = trials;
    report.allow_inconclusive = allow_inconclusive;

    for (unsigned long i = 0; i < trials; ++i) {
        TrialContext<F> ctx{Sampler<F>(seed + i), depth, &report.witnesses, 5};
        std::string desc;
        try {
            if (fn(ctx, desc)) {
                ++report.successes;
            } else {
                report.failures.push_back("trial " + std::to_string(i) + ": " + desc);
            }
        } catch (const Error& e) {
            if (e.code() == errc::precision_exhausted || e.code() == errc::sign_indeterminate)
                ++report.inconclusive;
            else
                report.failures.push_back("trial " + std::to_string(i) + ": " + desc + " raised " + e.what());
        }
    }
    return report;
}

template LawReport run_law<LcNumber>(const std::string&, std::uint64_t, unsigned long, int, bool);
template LawReport run_law<GrowthNumber>(const std::string&, std::uint64_t, unsigned long, int, bool);

}  // namespace nonarch
