#include "nonarch/hyperfinite.hpp"

#include "nonarch/field.hpp"

namespace nonarch {

namespace {

// upper = alpha·N + beta with nonnegative integers alpha, beta.
std::optional<std::pair<long, long>> affine_in_n(const GrowthNumber& upper) {
    if (upper.truncation_sig()) return std::nullopt;
    long alpha = 0, beta = 0;
    for (const auto& m : upper.monomials()) {
        if (m.alternating || !m.coeff.is_nonneg_integer()) return std::nullopt;
        if (m.sig == Signature{0, Rational(1), 1})
            alpha = m.coeff.to_long();
        else if (m.sig == Signature::unit())
            beta = m.coeff.to_long();
        else
            return std::nullopt;
    }
    return std::make_pair(alpha, beta);
}

// a^{alpha·N + beta + 1} as a growth monomial; alternation records the parity
// flip of negative bases raised to odd multiples of n.
GrowthNumber geometric_power(const Rational& a, long alpha, long beta) {
    if (a.is_zero()) return GrowthNumber();
    Rational mag = a.abs();
    Rational coeff = mag.pow(beta + 1);
    bool alternating = false;
    if (a.sign() < 0) {
        if ((beta + 1) % 2 != 0) coeff = -coeff;
        alternating = alpha % 2 != 0;
    }
    return GrowthNumber::monomial(coeff, {0, mag.pow(alpha), 0}, alternating);
}

struct GeomParts {
    long alpha, beta;
    GrowthNumber power;  // a^{upper+1}
};

GeomParts geom_parts(const Rational& a, const GrowthNumber& upper) {
    if (a == Rational(1))
        fail(errc::unit_ratio, "ratio 1 has no geometric closed form; the sum is upper + 1");
    if (!upper.eventually_integer())
        fail(errc::not_eventually_integer, upper.str() + " does not qualify as a hyperinteger upper index");
    auto affine = affine_in_n(upper);
    if (!affine)
        fail(errc::unsupported_backend,
             "a^(upper+1) lives in the growth grammar only for affine upper indices α·N + β, got " + upper.str());
    return {affine->first, affine->second, geometric_power(a, affine->first, affine->second)};
}

}  // namespace

HyperfiniteSumResult geom_hyperfinite_sum(const Rational& a, const GrowthNumber& upper) {
    GeomParts parts = geom_parts(a, upper);
    Rational formal = Rational(1) / (Rational(1) - a);

    GrowthNumber closed = GrowthNumber::from_rational(formal) - parts.power.scaled(formal);
    GrowthNumber error = -parts.power.scaled(formal);  // closed − 1/(1−a), exactly

    HyperfiniteSumResult result;
    result.closed_form = closed;
    result.error_term = error;
    result.verdict = error.classify();
    if (result.verdict.is_omega()) {
        result.shadow_value = formal;
        for (unsigned long k : {10ul, 100ul, 1000ul})
            result.certificate.emplace_back(k, parts.power.null_certificate(k));
    }
    return result;
}

GrowthNumber arithmetic_sum(const GrowthNumber& upper) {
    if (!upper.eventually_integer())
        fail(errc::not_eventually_integer, upper.str() + " does not qualify as a hyperinteger upper index");
    return upper + GrowthNumber::from_rational(1);
}

unsigned long sum_shadow_theorem(const Rational& a, const GrowthNumber& upper, unsigned long k) {
    GeomParts parts = geom_parts(a, upper);
    if (!(a.abs() < Rational(1)))
        fail(errc::not_infinitesimal, "the error term is infinitesimal only for |a| < 1");
    return parts.power.null_certificate(k);
}

std::string HyperfiniteSumResult::str() const {
    std::string out = "closed = " + closed_form.str();
    if (shadow_value) out += "; shadow = " + shadow_value->str();
    if (verdict.is_omega()) {
        out += "; error ∈ Ω (certificate:";
        for (size_t i = 0; i < certificate.size(); ++i) {
            out += (i ? ", " : " ") + std::to_string(certificate[i].first) + " ↦ " +
                   std::to_string(certificate[i].second);
        }
        out += ")";
    } else if (verdict.tag == Tag::infinite) {
        out += "; error ∈ Ψ: " + error_term.str();
    } else {
        out += "; error = " + error_term.str() + " (" + verdict.str() + ")";
    }
    return out;
}

}  // namespace nonarch
