#pragma once

#include <string>

#include "nonarch/field.hpp"
#include "nonarch/power_series.hpp"

namespace nonarch {

/// Complex numbers with components in a backend field; hosts the factor i of
/// the trigonometric factorizations.
template <FieldBackend F>
struct Complex {
    F re, im;

    static Complex from_real(F x) { return {std::move(x), F()}; }
    static Complex i() { return {F(), F::from_rational(1)}; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex conj() const { return {re, -im}; }
    F modulus_squared() const { return re * re + im * im; }

    std::string str() const { return "(" + re.str() + ") + i·(" + im.str() + ")"; }
};

/// The star-liftable maps. Values are exact Taylor truncations; arguments must
/// be infinitesimal (or zero), which keeps every coefficient rational.
enum class StarFn { sin, cos, exp, log1p };

inline TaylorName taylor_name(StarFn f) {
    switch (f) {
        case StarFn::sin: return TaylorName::sin;
        case StarFn::cos: return TaylorName::cos;
        case StarFn::exp: return TaylorName::exp;
        case StarFn::log1p:
        default: return TaylorName::log1p;
    }
}

inline const char* star_name(StarFn f) {
    switch (f) {
        case StarFn::sin: return "sin*";
        case StarFn::cos: return "cos*";
        case StarFn::exp: return "exp*";
        case StarFn::log1p:
        default: return "log1p*";
    }
}

/// Degree-K Taylor value of f at an infinitesimal delta, with the cutoff
/// recorded as a truncation at order K+1 in delta's leading order.
template <FieldBackend F>
F star_apply(StarFn f, const F& delta, long order) {
    Classification c = classify(delta);
    if (!c.is_omega())
        fail(errc::not_infinitesimal,
             std::string(star_name(f)) + " is only defined at infinitesimal arguments, got " + delta.str());

    PowerSeries series = PowerSeries::taylor(taylor_name(f), order);
    if (c.tag == Tag::zero && delta.is_exact_zero()) return F::from_rational(series.coeff(0));

    F sum = F::from_rational(series.coeff(0));
    F power = F::from_rational(1);
    for (long k = 1; k <= order; ++k) {
        power = power * delta;
        power = power.truncated_at_order(delta, order + 1);
        if (!series.coeff(k).is_zero()) sum = sum + power.scaled(series.coeff(k));
    }
    return sum.truncated_at_order(delta, order + 1);
}

/// x^m factored as e^s · residual with a rational scale exponent s and a
/// residual infinitely close to 1. Runs through exp ∘ log: t = m·log1p(x−1)
/// must classify as zero, infinitesimal, or appreciable with rational shadow.
template <FieldBackend F>
struct ScaledPower {
    Rational scale_exp;
    F residual;
};

template <FieldBackend F>
ScaledPower<F> hyper_pow(const F& x, const F& m, long order) {
    F u = x - F::from_rational(1);
    if (u.omega_status() != Cert::yes)
        fail(errc::not_near_one, "base " + x.str() + " is not infinitely close to 1");

    F t = m * star_apply(StarFn::log1p, u, order);
    Classification ct = t.is_exact_zero() ? Classification::zero() : classify(t);
    if (ct.tag == Tag::infinite)
        fail(errc::exponent_too_large, "exponent " + m.str() + " drives log out of the finite range");
    Rational s(0);
    if (ct.tag == Tag::appreciable) {
        if (!ct.shadow) fail(errc::shadow_irrational, "scale exponent has no rational shadow");
        s = *ct.shadow;
    }
    F residual = star_apply(StarFn::exp, t - F::from_rational(s), order);
    return {s, residual};
}

/// sin*(δ)² + cos*(δ)² = 1 through order K, checked both directly and through
/// the complex factorization (cos* + i·sin*)(cos* − i·sin*).
template <FieldBackend F>
bool pythagorean_check(const F& delta, long order) {
    F s = star_apply(StarFn::sin, delta, order);
    F c = star_apply(StarFn::cos, delta, order);
    F direct = s * s + c * c - F::from_rational(1);

    Complex<F> z{c, s};
    Complex<F> product = z * z.conj();
    F factored = product.re - F::from_rational(1);

    bool im_vanishes = product.im.is_exact_zero() || !product.im.has_terms();
    if (delta.is_exact_zero())
        return direct.is_exact_zero() && factored.is_exact_zero() && im_vanishes;
    return direct.vanishes_beyond(delta, order) && factored.vanishes_beyond(delta, order) && im_vanishes;
}

/// (cos z + i sin z)^n = cos nz + i sin nz, coefficientwise through degree K.
bool de_moivre_check(unsigned n, long order);

}  // namespace nonarch
