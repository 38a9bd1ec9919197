#include "nonarch/lc_number.hpp"

#include <algorithm>

namespace nonarch {

namespace {

std::optional<Rational> min_order(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

std::string exponent_str(const Rational& q) {
    if (q.is_integer()) return q.str();
    return "(" + q.str() + ")";
}

std::string term_str(const Rational& coeff, const Rational& q) {
    std::string body;
    if (q.is_zero()) {
        body = coeff.abs().str();
    } else {
        std::string power = q.is_one() ? "ε" : "ε^" + exponent_str(q);
        Rational a = coeff.abs();
        body = a.is_one() ? power : a.str() + "·" + power;
    }
    return body;
}

}  // namespace

LcNumber::LcNumber(std::vector<Term> terms, std::optional<Rational> trunc)
    : terms_(std::move(terms)), trunc_(std::move(trunc)) {
    normalize();
}

void LcNumber::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (trunc_ && t.first >= *trunc_) continue;
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
            if (merged.back().second.is_zero()) merged.pop_back();
        } else if (!t.second.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

LcNumber LcNumber::from_rational(const Rational& r) {
    return monomial(r, Rational(0));
}

LcNumber LcNumber::monomial(const Rational& coeff, const Rational& exponent) {
    if (coeff.is_zero()) return LcNumber();
    return LcNumber({{exponent, coeff}}, std::nullopt);
}

const Rational& LcNumber::leading_exponent() const {
    if (terms_.empty()) fail(errc::precision_exhausted, "no leading term");
    return terms_.front().first;
}

const Rational& LcNumber::leading_coeff() const {
    if (terms_.empty()) fail(errc::precision_exhausted, "no leading term");
    return terms_.front().second;
}

LcNumber operator+(const LcNumber& a, const LcNumber& b) {
    std::vector<LcNumber::Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return LcNumber(std::move(terms), min_order(a.trunc_, b.trunc_));
}

LcNumber LcNumber::operator-() const {
    std::vector<Term> terms = terms_;
    for (auto& t : terms) t.second = -t.second;
    return LcNumber(std::move(terms), trunc_);
}

LcNumber operator-(const LcNumber& a, const LcNumber& b) {
    return a + (-b);
}

LcNumber operator*(const LcNumber& a, const LcNumber& b) {
    // A truncation bound shifts by the other factor's leading exponent:
    // x = X + O(ε^s), y = Y + O(ε^t) gives xy = XY + O(ε^{min(lead X + t, lead Y + s, s + t)}).
    std::optional<Rational> trunc;
    if (a.trunc_ && !b.terms_.empty()) trunc = min_order(trunc, *a.trunc_ + b.leading_exponent());
    if (b.trunc_ && !a.terms_.empty()) trunc = min_order(trunc, *b.trunc_ + a.leading_exponent());
    if (a.trunc_ && b.trunc_) trunc = min_order(trunc, *a.trunc_ + *b.trunc_);

    std::vector<LcNumber::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            terms.emplace_back(ta.first + tb.first, ta.second * tb.second);
    return LcNumber(std::move(terms), std::move(trunc));
}

LcNumber LcNumber::scaled(const Rational& c) const {
    if (c.is_zero()) return LcNumber();
    std::vector<Term> terms = terms_;
    for (auto& t : terms) t.second *= c;
    return LcNumber(std::move(terms), trunc_);
}

LcNumber LcNumber::truncated_at(const Rational& bound) const {
    return LcNumber(terms_, min_order(trunc_, bound));
}

LcNumber LcNumber::inverse(int depth) const {
    if (terms_.empty()) {
        if (trunc_) fail(errc::precision_exhausted, "inverse of a value known only as " + str());
        fail(errc::zero_division, "inverse of zero");
    }
    const Rational& q0 = leading_exponent();
    const Rational& c0 = leading_coeff();
    LcNumber inv_lead = monomial(c0.inverse(), -q0);
    LcNumber u = *this * inv_lead - from_rational(1);  // relative tail, leading exponent > 0
    if (u.is_exact_zero()) return inv_lead;            // monomial: exact inverse

    std::optional<Rational> bound;
    if (u.has_terms()) bound = u.leading_exponent() * Rational(depth + 1);

    LcNumber sum = from_rational(1);
    LcNumber power = from_rational(1);
    LcNumber neg_u = -u;
    for (int i = 1; i <= depth; ++i) {
        power = power * neg_u;
        if (bound) power = power.truncated_at(*bound);
        if (power.is_exact_zero()) break;
        sum = sum + power;
    }
    if (bound) sum = sum.truncated_at(*bound);
    return inv_lead * sum;
}

LcNumber LcNumber::root(unsigned long p, int depth) const {
    if (p == 0) fail(errc::non_rational_root, "zeroth root");
    if (terms_.empty()) {
        if (trunc_) fail(errc::precision_exhausted, "root of a value known only as " + str());
        return LcNumber();  // p-th root of exact zero
    }
    const Rational& q0 = leading_exponent();
    const Rational& c0 = leading_coeff();
    if (c0.sign() < 0) fail(errc::negative_base, "p-th root of a negative element " + str());
    auto c_root = c0.nth_root(p);
    if (!c_root) fail(errc::non_rational_root, "leading coefficient " + c0.str() + " has no rational root of index " + std::to_string(p));

    LcNumber lead = monomial(*c_root, q0 / Rational(static_cast<long>(p)));
    LcNumber u = *this * monomial(c0.inverse(), -q0) - from_rational(1);
    if (u.is_exact_zero()) return lead;

    std::optional<Rational> bound;
    if (u.has_terms()) bound = u.leading_exponent() * Rational(depth + 1);

    Rational alpha(1, static_cast<long>(p));
    LcNumber sum = from_rational(1);
    LcNumber power = from_rational(1);
    for (int i = 1; i <= depth; ++i) {
        power = power * u;
        if (bound) power = power.truncated_at(*bound);
        if (power.is_exact_zero()) break;
        sum = sum + power.scaled(binomial_general(alpha, i));
    }
    if (bound) sum = sum.truncated_at(*bound);
    return lead * sum;
}

LcNumber LcNumber::pow(long e, int depth) const {
    if (e == 0) return from_rational(1);
    if (e < 0) return inverse(depth).pow(-e, depth);
    if (terms_.size() == 1 && !trunc_) {
        // exact monomial power
        return monomial(terms_[0].second.pow(e), terms_[0].first * Rational(e));
    }
    LcNumber acc = from_rational(1);
    LcNumber base = *this;
    unsigned long mag = static_cast<unsigned long>(e);
    while (mag > 0) {
        if (mag & 1) acc = acc * base;
        mag >>= 1;
        if (mag > 0) base = base * base;
    }
    return acc;
}

std::strong_ordering LcNumber::compare(const LcNumber& other) const {
    LcNumber d = *this - other;
    if (d.terms_.empty()) {
        if (d.trunc_)
            fail(errc::precision_exhausted,
                 "difference cancels to " + d.str() + "; recompute inputs at higher depth");
        return std::strong_ordering::equal;
    }
    return d.leading_coeff().sign() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

LcNumber LcNumber::abs() const {
    if (terms_.empty()) return *this;
    return leading_coeff().sign() < 0 ? -*this : *this;
}

Classification LcNumber::classify() const {
    if (terms_.empty()) {
        if (trunc_) {
            if (*trunc_ > Rational(0))
                fail(errc::precision_exhausted,
                     "value " + str() + " is infinitely small but Zero vs Infinitesimal is hidden by truncation");
            fail(errc::precision_exhausted, "classification of " + str() + " hidden by truncation");
        }
        return Classification::zero();
    }
    const Rational& q0 = leading_exponent();
    int c = q0.sign();
    if (c > 0) return Classification::infinitesimal();
    if (c < 0) return Classification::infinite();
    return Classification::appreciable(leading_coeff());
}

Cert LcNumber::omega_status() const {
    if (terms_.empty()) {
        if (!trunc_) return Cert::yes;                     // exact zero
        return *trunc_ > Rational(0) ? Cert::yes : Cert::unknown;
    }
    // stored leading term dominates anything hidden (invariant: exponents < q★)
    return leading_exponent() > Rational(0) ? Cert::yes : Cert::no;
}

std::string LcNumber::str() const {
    std::string out;
    if (terms_.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [q, c] : terms_) {
            if (first) {
                if (c.sign() < 0) out += "−";
                first = false;
            } else {
                out += c.sign() < 0 ? " − " : " + ";
            }
            out += term_str(c, q);
        }
    }
    if (trunc_) out += " (+O(ε^" + exponent_str(*trunc_) + "))";
    return out;
}

}  // namespace nonarch
