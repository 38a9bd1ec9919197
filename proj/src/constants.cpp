#include "nonarch/constants.hpp"

#include <optional>
#include <utility>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

constexpr unsigned kDigitCap = 200;

struct Bracket {
    Rational lo, hi;
};

Bracket operator+(const Bracket& a, const Bracket& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Bracket scale(const Bracket& b, const Rational& c) {
    return c.sign() >= 0 ? Bracket{b.lo * c, b.hi * c} : Bracket{b.hi * c, b.lo * c};
}

// Quotient of positive brackets.
Bracket divide(const Bracket& a, const Bracket& b) {
    return {a.lo / b.hi, a.hi / b.lo};
}

// Σ 1/k! with tail bound 2/(K+1)!.
Bracket e_bracket(const Rational& width) {
    Rational sum(0), term(1);
    for (unsigned long k = 0;; ++k) {
        sum += term;
        Rational tail = Rational(2) / Rational(factorial(k + 1));
        if (tail < width) return {sum, sum + tail};
        term = term / Rational(static_cast<long>(k + 1));
    }
}

// atan(y) for 0 < y < 1 by its alternating series; the truth lies between
// consecutive partial sums.
Bracket atan_bracket(const Rational& y, const Rational& width) {
    Rational y2 = y * y;
    Rational sum(0), power = y;
    for (unsigned long m = 0;; ++m) {
        Rational term = power / Rational(static_cast<long>(2 * m + 1));
        Rational prev = sum;
        sum += (m % 2 == 0) ? term : -term;
        if (term < width && m > 0)
            return {std::min(prev, sum), std::max(prev, sum)};
        power *= y2;
    }
}

// atanh(y) for 0 < y < 1: positive series with geometric tail bound.
Bracket atanh_bracket(const Rational& y, const Rational& width) {
    Rational y2 = y * y;
    Rational geom = Rational(1) / (Rational(1) - y2);
    Rational sum(0), power = y;
    for (unsigned long m = 0;; ++m) {
        sum += power / Rational(static_cast<long>(2 * m + 1));
        Rational tail = power * y2 / Rational(static_cast<long>(2 * m + 3)) * geom;
        if (tail < width) return {sum, sum + tail};
        power *= y2;
    }
}

Bracket pi_bracket(const Rational& width) {
    Rational part = width / Rational(40);
    Bracket a5 = atan_bracket(Rational(1, 5), part);
    Bracket a239 = atan_bracket(Rational(1, 239), part);
    return scale(a5, Rational(16)) + scale(a239, Rational(-4));
}

Bracket ln10_bracket(const Rational& width) {
    Rational part = width / Rational(16);
    Bracket t3 = atanh_bracket(Rational(1, 3), part);
    Bracket t9 = atanh_bracket(Rational(1, 9), part);
    return scale(t3, Rational(6)) + scale(t9, Rational(2));
}

// Truncated decimal string when the whole bracket pins it down.
std::optional<std::string> certified_digits(const Bracket& b, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class flo = (b.lo * Rational(scale)).floor();
    mpz_class fhi = (b.hi * Rational(scale)).floor();
    if (flo != fhi || flo < 0) return std::nullopt;
    mpz_class ipart = flo / scale, frac = flo % scale;
    if (digits == 0) return ipart.get_str();
    std::string f = frac.get_str();
    f.insert(f.begin(), digits - f.size(), '0');
    return ipart.get_str() + "." + f;
}

template <typename MakeBracket>
DecimalWitness certify(MakeBracket make, unsigned digits) {
    if (digits > kDigitCap)
        fail(errc::precision_cap, "at most " + std::to_string(kDigitCap) + " digits are supported");
    Rational width = Rational(10).pow(-static_cast<long>(digits) - 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Bracket b = make(width);
        if (auto s = certified_digits(b, digits)) return {b.lo, b.hi, *s};
        width = width / Rational(10000);
    }
    fail(errc::precision_cap, "bracket refuses to settle at " + std::to_string(digits) + " digits");
}

}  // namespace

DecimalWitness constant_e(unsigned digits) {
    return certify([](const Rational& w) { return e_bracket(w); }, digits);
}

DecimalWitness constant_pi(unsigned digits) {
    return certify([](const Rational& w) { return pi_bracket(w); }, digits);
}

DecimalWitness constant_ln10(unsigned digits) {
    return certify([](const Rational& w) { return ln10_bracket(w); }, digits);
}

DecimalWitness constant_by_name(const std::string& name, unsigned digits) {
    if (name == "e") return constant_e(digits);
    if (name == "pi") return constant_pi(digits);
    if (name == "ln10") return constant_ln10(digits);
    fail(errc::unknown_name, "no constant named '" + name + "'");
}

DecimalWitness log10_ratio_million(unsigned digits) {
    return certify(
        [](const Rational& w) {
            // ln(1000001/1000000) = 2·atanh(1/2000001), then divide by ln 10
            Bracket num = scale(atanh_bracket(Rational(1, 2000001), w / Rational(8)), Rational(2));
            Bracket den = ln10_bracket(w / Rational(8));
            return divide(num, den);
        },
        digits);
}

}  // namespace nonarch
