#pragma once

#include <compare>
#include <concepts>
#include <string>

#include "nonarch/classification.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/lc_number.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

/// Contract every backend fulfils: an ordered-field model with exact ring
/// operations, truncated division/roots with exact leading terms, structural
/// classification, and a canonical pair of linked generators eps and N with
/// eps · N = 1.
template <typename F>
concept FieldBackend = requires(const F x, const F y, const Rational& r, int depth, long e, unsigned long p) {
    { F() } -> std::same_as<F>;
    { F::from_rational(r) } -> std::same_as<F>;
    { F::eps() } -> std::same_as<F>;
    { F::inf_n() } -> std::same_as<F>;
    { x + y } -> std::same_as<F>;
    { x - y } -> std::same_as<F>;
    { x * y } -> std::same_as<F>;
    { -x } -> std::same_as<F>;
    { x.scaled(r) } -> std::same_as<F>;
    { x.inverse(depth) } -> std::same_as<F>;
    { x.root(p, depth) } -> std::same_as<F>;
    { x.pow(e, depth) } -> std::same_as<F>;
    { x.compare(y) } -> std::same_as<std::strong_ordering>;
    { x.abs() } -> std::same_as<F>;
    { x.classify() } -> std::same_as<Classification>;
    { x.omega_status() } -> std::same_as<Cert>;
    { x.is_exact_zero() } -> std::same_as<bool>;
    { x.has_terms() } -> std::same_as<bool>;
    { x.truncated_at_order(y, e) } -> std::same_as<F>;
    { x.vanishes_beyond(y, e) } -> std::same_as<bool>;
    { x.str() } -> std::same_as<std::string>;
    { F::backend_name() } -> std::same_as<std::string>;
    { x == y } -> std::same_as<bool>;
};

/// Magnitude class of x, with the rational shadow for appreciable elements.
template <FieldBackend F>
Classification classify(const F& x) {
    return x.classify();
}

/// x ≈ y: the difference is zero or infinitesimal. Alternating differences are
/// resolved by magnitude bounds; truncation that hides the verdict raises
/// PrecisionExhausted.
template <FieldBackend F>
bool is_close(const F& x, const F& y) {
    switch ((x - y).omega_status()) {
        case Cert::yes: return true;
        case Cert::no: return false;
        case Cert::unknown:
        default:
            fail(errc::precision_exhausted,
                 "closeness of " + x.str() + " and " + y.str() + " hidden by truncation");
    }
}

/// Standard part: the unique rational infinitely close to a finite element.
template <FieldBackend F>
Rational shadow(const F& x) {
    Classification c = classify(x);
    switch (c.tag) {
        case Tag::zero:
        case Tag::infinitesimal:
            return Rational(0);
        case Tag::appreciable:
            if (!c.shadow) fail(errc::shadow_irrational, "no rational shadow for " + x.str());
            return *c.shadow;
        case Tag::infinite:
        default:
            fail(errc::not_finite, x.str() + " has no standard part");
    }
}

}  // namespace nonarch
