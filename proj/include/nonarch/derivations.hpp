#pragma once

#include <string>

#include "nonarch/field.hpp"
#include "nonarch/star.hpp"
#include "nonarch/transcript.hpp"

namespace nonarch {

/// C(n, k) = n(n−1)···(n−k+1)/k! for an arbitrary field element n. Agrees with
/// the integer binomial on embeddings and satisfies the Pascal identity
/// exactly.
template <FieldBackend F>
F hyper_binom(const F& n, unsigned k) {
    F prod = F::from_rational(1);
    for (unsigned i = 0; i < k; ++i) prod = prod * (n - F::from_rational(Rational(static_cast<long>(i))));
    return prod.scaled(Rational(1) / Rational(factorial(k)));
}

/// Both halves of the termwise lemma for an infinite n:
/// (n−k)/(kn) ≈ 1/k and C(n,k)/n^k ≈ 1/k!.
template <FieldBackend F>
bool binom_ratio_lemma(const F& n, unsigned k, int depth) {
    if (k == 0) return false;
    long kl = static_cast<long>(k);
    F ratio = (n - F::from_rational(Rational(kl))) * n.scaled(Rational(kl)).inverse(depth);
    bool first = is_close(ratio, F::from_rational(Rational(1, kl)));

    F scaled_binom = hyper_binom(n, k) * n.pow(kl, depth).inverse(depth);
    bool second = is_close(scaled_binom, F::from_rational(Rational(1) / Rational(factorial(k))));
    return first && second;
}

namespace detail {

inline std::string ordinal_power(const std::string& base, unsigned k) {
    return k == 1 ? base : base + "^" + std::to_string(k);
}

template <FieldBackend F>
TranscriptStep close_step(std::string statement, const F& lhs, const F& rhs, std::string ref) {
    TranscriptStep step;
    step.statement = std::move(statement);
    step.lhs = lhs.str();
    step.rhs = rhs.str();
    step.close = true;
    step.passed = is_close(lhs, rhs);
    step.ref = std::move(ref);
    return step;
}

template <FieldBackend F>
TranscriptStep infinitesimal_step(std::string statement, const F& x, std::string ref) {
    TranscriptStep step;
    step.statement = std::move(statement);
    step.lhs = x.str();
    step.rhs = "0";
    step.close = true;
    step.passed = classify(x).tag == Tag::infinitesimal;
    step.ref = std::move(ref);
    return step;
}

inline std::string truncation_footer(long k) {
    return "all sums are truncated at K = " + std::to_string(k) +
           ": each retained term is checked individually and the finite truncations are compared "
           "exactly; closeness of the full hyperfinite sums is beyond this finite-K check";
}

}  // namespace detail

/// Replay of the exponential-series derivation: ω = z/N is infinitesimal,
/// every retained binomial term C(N,k)(z/N)^k is infinitely close to z^k/k!,
/// and the truncated binomial sum is infinitely close to the truncated series.
template <FieldBackend F>
Transcript exp_derivation(const Rational& z, long order, int depth) {
    Transcript t;
    t.title = "exp-series";
    t.v = z;
    t.k = order;
    t.backend = F::backend_name();
    t.footer = detail::truncation_footer(order);

    F big_n = F::inf_n();
    F omega = F::eps().scaled(z);  // z/N, exact on both backends
    t.steps.push_back(detail::infinitesimal_step("ω := z/N is infinitesimal", omega,
                                                 "Introductio I, §115"));

    F term_sum = F();
    Rational target_sum(0);
    for (long k = 0; k <= order; ++k) {
        F term = hyper_binom(big_n, static_cast<unsigned>(k)) * omega.pow(k, depth);
        Rational target = z.pow(k) / Rational(factorial(k));
        std::string stmt = "C(N," + std::to_string(k) + ")·(z/N)" +
                           (k == 1 ? "" : "^" + std::to_string(k)) + " ≈ z^" + std::to_string(k) +
                           "/" + std::to_string(k) + "!";
        t.steps.push_back(detail::close_step(stmt, term, F::from_rational(target),
                                             "Introductio I, §116"));
        term_sum = term_sum + term;
        target_sum += target;
    }

    TranscriptStep sum_step = detail::close_step(
        "Σ_{k≤K} C(N,k)(z/N)^k ≈ Σ_{k≤K} z^k/k! = " + target_sum.str(), term_sum,
        F::from_rational(target_sum), "Introductio I, §116");
    t.steps.push_back(std::move(sum_step));
    return t;
}

/// Replay of the sine/cosine derivation: z = v/N infinitesimal, sin*(z) ≈ z
/// and cos*(z) ≈ 1, the high cosine powers stay infinitely close to 1, every
/// retained term C(N,k)cos^{N−k}(z)sin^k(z) is infinitely close to v^k/k!, and
/// the alternating truncations reproduce the truncated sine and cosine series.
template <FieldBackend F>
Transcript sincos_derivation(const Rational& v, long order, int depth) {
    Transcript t;
    t.title = "sincos-series";
    t.v = v;
    t.k = order;
    t.backend = F::backend_name();
    t.footer = detail::truncation_footer(order);

    long star_order = order + 2;
    F big_n = F::inf_n();
    F z = F::eps().scaled(v);
    t.steps.push_back(detail::infinitesimal_step("z := v/N is infinitesimal", z,
                                                 "Introductio I, §134"));

    F sin_z = star_apply(StarFn::sin, z, star_order);
    F cos_z = star_apply(StarFn::cos, z, star_order);
    t.steps.push_back(detail::close_step("sin*(z) ≈ z", sin_z, z, "Introductio I, §134"));
    t.steps.push_back(detail::close_step("cos*(z) ≈ 1", cos_z, F::from_rational(1),
                                         "Introductio I, §134"));

    F one = F::from_rational(1);
    F cos_sum = F(), sin_sum = F();
    Rational cos_target(0), sin_target(0);
    for (long k = 0; k <= order; ++k) {
        F exponent = big_n - F::from_rational(Rational(k));
        ScaledPower<F> p = hyper_pow(cos_z, exponent, star_order);
        TranscriptStep pow_step = detail::close_step(
            "cos*(z)^(N−" + std::to_string(k) + ") ≈ 1", p.residual, one, "Introductio I, §134");
        pow_step.passed = pow_step.passed && p.scale_exp == Rational(0);
        t.steps.push_back(std::move(pow_step));

        F sin_pow = one;
        for (long i = 0; i < k; ++i) sin_pow = sin_pow * sin_z;
        F term = hyper_binom(big_n, static_cast<unsigned>(k)) * p.residual * sin_pow;
        Rational target = v.pow(k) / Rational(factorial(k));
        std::string stmt = "C(N," + std::to_string(k) + ")·cos*(z)^(N−" + std::to_string(k) +
                           ")·sin*(z)^" + std::to_string(k) + " ≈ v^" + std::to_string(k) + "/" +
                           std::to_string(k) + "!";
        t.steps.push_back(detail::close_step(stmt, term, F::from_rational(target),
                                             "Introductio I, §134"));

        // the factorization (E5)-style signs: even terms build the cosine,
        // odd terms the sine, alternating in blocks of two
        Rational sign = ((k / 2) % 2 == 0) ? Rational(1) : Rational(-1);
        if (k % 2 == 0) {
            cos_sum = cos_sum + term.scaled(sign);
            cos_target += sign * target;
        } else {
            sin_sum = sin_sum + term.scaled(sign);
            sin_target += sign * target;
        }
    }

    t.steps.push_back(detail::close_step("truncated cos sum ≈ " + cos_target.str(), cos_sum,
                                         F::from_rational(cos_target), "Introductio I, §134"));
    t.steps.push_back(detail::close_step("truncated sin sum ≈ " + sin_target.str(), sin_sum,
                                         F::from_rational(sin_target), "Introductio I, §134"));
    return t;
}

/// Replay of the exponential route to the trigonometric series: the termwise
/// expansion of (1 + iv/N)^N matches i^k v^k/k! in both components, and the
/// truncated sum lands on truncated cos v + i·sin v.
template <FieldBackend F>
Transcript euler_formula_derivation(const Rational& v, long order, int depth) {
    (void)depth;
    Transcript t;
    t.title = "euler-formula";
    t.v = v;
    t.k = order;
    t.backend = F::backend_name();
    t.footer = detail::truncation_footer(order);

    F big_n = F::inf_n();
    F z = F::eps().scaled(v);
    t.steps.push_back(detail::infinitesimal_step("iv/N has an infinitesimal component v/N", z,
                                                 "Introductio I, §138"));

    Complex<F> iz{F(), z};  // iv/N
    Complex<F> power{F::from_rational(1), F()};
    Complex<F> sum{F(), F()};
    Rational re_target_sum(0), im_target_sum(0);
    for (long k = 0; k <= order; ++k) {
        if (k > 0) power = power * iz;
        F binom = hyper_binom(big_n, static_cast<unsigned>(k));
        Complex<F> term{binom * power.re, binom * power.im};

        // i^k v^k/k! split into components
        Rational mag = v.pow(k) / Rational(factorial(k));
        Rational re_target(0), im_target(0);
        switch (k % 4) {
            case 0: re_target = mag; break;
            case 1: im_target = mag; break;
            case 2: re_target = -mag; break;
            case 3: im_target = -mag; break;
        }

        TranscriptStep step;
        step.statement = "C(N," + std::to_string(k) + ")·(iv/N)^" + std::to_string(k) +
                         " ≈ i^" + std::to_string(k) + "·v^" + std::to_string(k) + "/" +
                         std::to_string(k) + "!";
        step.lhs = term.str();
        step.rhs = "(" + re_target.str() + ") + i·(" + im_target.str() + ")";
        step.close = true;
        step.passed = is_close(term.re, F::from_rational(re_target)) &&
                      is_close(term.im, F::from_rational(im_target));
        step.ref = "Introductio I, §138";
        t.steps.push_back(std::move(step));

        sum = sum + term;
        re_target_sum += re_target;
        im_target_sum += im_target;
    }

    TranscriptStep conclusion;
    conclusion.statement = "truncated (1+iv/N)^N ≈ truncated cos v + i·sin v = (" +
                           re_target_sum.str() + ") + i·(" + im_target_sum.str() + ")";
    conclusion.lhs = sum.str();
    conclusion.rhs = "(" + re_target_sum.str() + ") + i·(" + im_target_sum.str() + ")";
    conclusion.close = true;
    conclusion.passed = is_close(sum.re, F::from_rational(re_target_sum)) &&
                        is_close(sum.im, F::from_rational(im_target_sum));
    conclusion.ref = "Introductio I, §138";
    t.steps.push_back(std::move(conclusion));
    return t;
}

}  // namespace nonarch
