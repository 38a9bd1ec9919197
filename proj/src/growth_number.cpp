#include "nonarch/growth_number.hpp"

#include <algorithm>

namespace nonarch {

namespace {

// Weakest (highest) of two truncation bounds; nullopt means "nothing hidden".
std::optional<Signature> weakest(const std::optional<Signature>& a, const std::optional<Signature>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? b : a;
}

bool mono_order(const GrowthMonomial& a, const GrowthMonomial& b) {
    if (a.sig != b.sig) return b.sig < a.sig;  // descending
    return a.alternating < b.alternating;      // plain term first
}

}  // namespace

std::string Signature::str() const {
    return "(" + std::to_string(fact_deg) + "," + exp_base.str() + "," + std::to_string(pow_deg) + ")";
}

Rational GrowthMonomial::eval(unsigned long n) const {
    Rational v = coeff;
    if (sig.fact_deg != 0) v *= Rational(factorial(n)).pow(sig.fact_deg);
    if (!sig.exp_base.is_one()) v *= sig.exp_base.pow(static_cast<long>(n));
    if (sig.pow_deg != 0) v *= Rational(static_cast<long>(n)).pow(sig.pow_deg);
    if (alternating && n % 2 == 1) v = -v;
    return v;
}

GrowthNumber::GrowthNumber(std::vector<GrowthMonomial> mono, std::optional<Signature> trunc)
    : mono_(std::move(mono)), trunc_(std::move(trunc)) {
    normalize();
}

void GrowthNumber::normalize() {
    std::sort(mono_.begin(), mono_.end(), mono_order);
    std::vector<GrowthMonomial> merged;
    merged.reserve(mono_.size());
    for (auto& m : mono_) {
        if (m.coeff.is_zero()) continue;
        if (trunc_ && m.sig < *trunc_) continue;
        if (!merged.empty() && merged.back().sig == m.sig && merged.back().alternating == m.alternating) {
            merged.back().coeff += m.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(m));
        }
    }
    mono_ = std::move(merged);
}

GrowthNumber GrowthNumber::from_rational(const Rational& r) {
    return monomial(r, Signature::unit());
}

GrowthNumber GrowthNumber::monomial(const Rational& coeff, const Signature& sig, bool alternating) {
    if (coeff.is_zero()) return GrowthNumber();
    if (sig.exp_base.sign() <= 0) fail(errc::negative_base, "exponential base must be positive");
    return GrowthNumber({{coeff, sig, alternating}}, std::nullopt);
}

const GrowthMonomial& GrowthNumber::leading() const {
    if (mono_.empty()) fail(errc::precision_exhausted, "no leading monomial");
    return mono_.front();
}

GrowthNumber operator+(const GrowthNumber& a, const GrowthNumber& b) {
    std::vector<GrowthMonomial> mono = a.mono_;
    mono.insert(mono.end(), b.mono_.begin(), b.mono_.end());
    return GrowthNumber(std::move(mono), weakest(a.trunc_, b.trunc_));
}

GrowthNumber GrowthNumber::operator-() const {
    std::vector<GrowthMonomial> mono = mono_;
    for (auto& m : mono) m.coeff = -m.coeff;
    return GrowthNumber(std::move(mono), trunc_);
}

GrowthNumber operator-(const GrowthNumber& a, const GrowthNumber& b) {
    return a + (-b);
}

GrowthNumber operator*(const GrowthNumber& a, const GrowthNumber& b) {
    std::optional<Signature> trunc;
    if (a.trunc_ && !b.mono_.empty()) trunc = weakest(trunc, *a.trunc_ + b.leading().sig);
    if (b.trunc_ && !a.mono_.empty()) trunc = weakest(trunc, *b.trunc_ + a.leading().sig);
    if (a.trunc_ && b.trunc_) trunc = weakest(trunc, *a.trunc_ + *b.trunc_);

    std::vector<GrowthMonomial> mono;
    mono.reserve(a.mono_.size() * b.mono_.size());
    for (const auto& ma : a.mono_)
        for (const auto& mb : b.mono_)
            mono.push_back({ma.coeff * mb.coeff, ma.sig + mb.sig,
                            ma.alternating != mb.alternating});
    return GrowthNumber(std::move(mono), std::move(trunc));
}

GrowthNumber GrowthNumber::scaled(const Rational& c) const {
    if (c.is_zero()) return GrowthNumber();
    std::vector<GrowthMonomial> mono = mono_;
    for (auto& m : mono) m.coeff *= c;
    return GrowthNumber(std::move(mono), trunc_);
}

GrowthNumber GrowthNumber::truncated_below(const Signature& bound) const {
    return GrowthNumber(mono_, weakest(trunc_, bound));
}

GrowthNumber GrowthNumber::inverse(int depth) const {
    if (mono_.empty()) {
        if (trunc_) fail(errc::precision_exhausted, "inverse of a value known only as " + str());
        fail(errc::zero_division, "inverse of zero");
    }
    const GrowthMonomial& lead = leading();
    if (lead.alternating)
        fail(errc::sign_indeterminate, "inverse of an element with alternating leading term " + str());
    GrowthNumber inv_lead = monomial(lead.coeff.inverse(), -lead.sig);
    GrowthNumber u = *this * inv_lead - from_rational(1);  // all signatures below unit
    if (u.is_exact_zero()) return inv_lead;

    // The Neumann remainder u^{depth+1}/(1+u) has leading signature exactly
    // gap^{depth+1}; "strictly below" forces the bound one power higher.
    std::optional<Signature> bound;
    if (u.has_terms()) bound = u.leading().sig.times(depth);

    GrowthNumber sum = from_rational(1);
    GrowthNumber power = from_rational(1);
    GrowthNumber neg_u = -u;
    for (int i = 1; i <= depth; ++i) {
        power = power * neg_u;
        if (bound) power = power.truncated_below(*bound);
        if (power.is_exact_zero()) break;
        sum = sum + power;
    }
    if (bound) sum = sum.truncated_below(*bound);
    return inv_lead * sum;
}

GrowthNumber GrowthNumber::root(unsigned long p, int depth) const {
    if (p == 0) fail(errc::non_rational_root, "zeroth root");
    if (mono_.empty()) {
        if (trunc_) fail(errc::precision_exhausted, "root of a value known only as " + str());
        return GrowthNumber();
    }
    const GrowthMonomial& lead = leading();
    if (lead.alternating)
        fail(errc::sign_indeterminate, "root of an element with alternating leading term");
    if (lead.coeff.sign() < 0) fail(errc::negative_base, "p-th root of a negative element " + str());
    long pl = static_cast<long>(p);
    if (lead.sig.fact_deg % pl != 0 || lead.sig.pow_deg % pl != 0)
        fail(errc::non_rational_root, "leading signature " + lead.sig.str() + " not divisible by " + std::to_string(p));
    auto c_root = lead.coeff.nth_root(p);
    auto b_root = lead.sig.exp_base.nth_root(p);
    if (!c_root || !b_root)
        fail(errc::non_rational_root, "no rational root of index " + std::to_string(p) + " for leading monomial");

    GrowthNumber root_lead = monomial(*c_root, {lead.sig.fact_deg / pl, *b_root, lead.sig.pow_deg / pl});
    GrowthNumber u = *this * monomial(lead.coeff.inverse(), -lead.sig) - from_rational(1);
    if (u.is_exact_zero()) return root_lead;

    std::optional<Signature> bound;
    if (u.has_terms()) bound = u.leading().sig.times(depth);

    Rational alpha(1, pl);
    GrowthNumber sum = from_rational(1);
    GrowthNumber power = from_rational(1);
    for (int i = 1; i <= depth; ++i) {
        power = power * u;
        if (bound) power = power.truncated_below(*bound);
        if (power.is_exact_zero()) break;
        sum = sum + power.scaled(binomial_general(alpha, i));
    }
    if (bound) sum = sum.truncated_below(*bound);
    return root_lead * sum;
}

GrowthNumber GrowthNumber::pow(long e, int depth) const {
    if (e == 0) return from_rational(1);
    if (e < 0) return inverse(depth).pow(-e, depth);
    if (mono_.size() == 1 && !trunc_) {
        const GrowthMonomial& m = mono_[0];
        return monomial(m.coeff.pow(e), m.sig.times(e), m.alternating && (e % 2 == 1));
    }
    GrowthNumber acc = from_rational(1);
    GrowthNumber base = *this;
    unsigned long mag = static_cast<unsigned long>(e);
    while (mag > 0) {
        if (mag & 1) acc = acc * base;
        mag >>= 1;
        if (mag > 0) base = base * base;
    }
    return acc;
}

std::optional<int> GrowthNumber::eventual_sign() const {
    if (mono_.empty()) return trunc_ ? std::nullopt : std::optional<int>(0);
    const Signature& top = mono_.front().sig;
    Rational plain(0), alt(0);
    for (const auto& m : mono_) {
        if (!(m.sig == top)) break;
        (m.alternating ? alt : plain) = m.coeff;
    }
    // The plain part must strictly dominate the alternating partner at the same
    // signature; otherwise the sign flips (or vanishes) along a parity.
    if (plain.abs() > alt.abs()) return plain.sign();
    return std::nullopt;
}

std::strong_ordering GrowthNumber::compare(const GrowthNumber& other) const {
    GrowthNumber d = *this - other;
    if (d.mono_.empty()) {
        if (d.trunc_)
            fail(errc::precision_exhausted,
                 "difference cancels to " + d.str() + "; recompute inputs at higher depth");
        return std::strong_ordering::equal;
    }
    auto s = d.eventual_sign();
    if (!s)
        fail(errc::sign_indeterminate,
             "eventual sign of " + d.str() + " is not decided by the cofinite fragment");
    return *s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

GrowthNumber GrowthNumber::abs() const {
    if (mono_.empty()) return *this;
    if (mono_.size() == 1 && !trunc_) {
        // |c·(-1)^n·g| = |c|·g pointwise
        return monomial(mono_[0].coeff.abs(), mono_[0].sig);
    }
    auto s = eventual_sign();
    if (!s) fail(errc::sign_indeterminate, "absolute value of " + str() + " needs an eventual sign");
    return *s < 0 ? -*this : *this;
}

Classification GrowthNumber::classify() const {
    if (mono_.empty()) {
        if (trunc_) {
            if (!(Signature::unit() < *trunc_))
                fail(errc::precision_exhausted,
                     "value " + str() + " is infinitely small but Zero vs Infinitesimal is hidden by truncation");
            fail(errc::precision_exhausted, "classification of " + str() + " hidden by truncation");
        }
        return Classification::zero();
    }
    const Signature& top = mono_.front().sig;
    Rational plain(0), alt(0);
    for (const auto& m : mono_) {
        if (!(m.sig == top)) break;
        (m.alternating ? alt : plain) = m.coeff;
    }
    Signature unit = Signature::unit();
    if (top < unit) return Classification::infinitesimal();
    if (unit < top) {
        if (!alt.is_zero() && !(plain.abs() > alt.abs()) && !(alt.abs() > plain.abs()))
            fail(errc::sign_indeterminate,
                 "leading magnitude of " + str() + " vanishes along one parity");
        return Classification::infinite();
    }
    if (!alt.is_zero())
        fail(errc::sign_indeterminate, "no shadow: " + str() + " oscillates at unit signature");
    return Classification::appreciable(plain);
}

Cert GrowthNumber::omega_status() const {
    Signature unit = Signature::unit();
    if (mono_.empty()) {
        if (!trunc_) return Cert::yes;
        return !(unit < *trunc_) ? Cert::yes : Cert::unknown;
    }
    if (mono_.front().sig < unit) return Cert::yes;  // stored bound covers hidden terms
    // Leading magnitude survives on at least one parity, so |x| stays above
    // some fixed rational on a cofinal set.
    return Cert::no;
}

Rational GrowthNumber::eval(unsigned long n) const {
    if (n == 0) fail(errc::syntax_error, "sequence indices start at 1");
    Rational v(0);
    for (const auto& m : mono_) v += m.eval(n);
    return v;
}

namespace {

// Smallest n1 such that |c|·g(n) is non-increasing for all n >= n1, certified
// by the ratio g(n+1)/g(n) = (n+1)^m · b · ((n+1)/n)^d <= 1 case analysis.
unsigned long ratio_threshold(const Signature& sig) {
    long m = sig.fact_deg, d = sig.pow_deg;
    const Rational& b = sig.exp_base;
    if (m == 0) {
        if (b < Rational(1)) {
            if (d <= 0) return 1;
            for (unsigned long n1 = 1;; ++n1) {
                Rational f = Rational(static_cast<long>(n1 + 1), static_cast<long>(n1)).pow(d);
                if (b * f <= Rational(1)) return n1;
            }
        }
        return 1;  // b == 1, d < 0: ratio < 1 everywhere
    }
    // m < 0 for infinitesimal signatures
    for (unsigned long n1 = 1;; ++n1) {
        Rational f = d > 0 ? Rational(static_cast<long>(n1 + 1), static_cast<long>(n1)).pow(d) : Rational(1);
        Rational fact_part = Rational(static_cast<long>(n1 + 1)).pow(-m);
        if (b * f <= fact_part) return n1;
    }
}

}  // namespace

unsigned long GrowthNumber::null_certificate(unsigned long k) const {
    if (k == 0) fail(errc::syntax_error, "certificate bound must be a positive integer");
    if (trunc_) fail(errc::precision_exhausted, "certificate needs an exact element");
    if (mono_.empty()) return 1;  // identically zero
    Signature unit = Signature::unit();
    for (const auto& m : mono_)
        if (!(m.sig < unit))
            fail(errc::not_infinitesimal, str() + " is not infinitesimal");

    unsigned long start = 1;
    for (const auto& m : mono_) start = std::max(start, ratio_threshold(m.sig));

    auto magnitude = [&](unsigned long n) {
        Rational v(0);
        for (const auto& m : mono_) {
            GrowthMonomial mm{m.coeff.abs(), m.sig, false};
            v += mm.eval(n);
        }
        return v;
    };
    Rational bound(1, static_cast<long>(k));

    // |x(n)| <= M(n), and M is non-increasing beyond `start`; gallop for the
    // first index where M drops below 1/k.
    if (magnitude(start) < bound) return start;
    unsigned long lo = start, hi = start * 2;
    while (!(magnitude(hi) < bound)) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        unsigned long mid = lo + (hi - lo) / 2;
        if (magnitude(mid) < bound)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool GrowthNumber::eventually_integer() const {
    if (trunc_ || mono_.empty()) return false;
    for (const auto& m : mono_) {
        if (m.alternating) return false;
        if (!m.coeff.is_nonneg_integer() || m.coeff.is_zero()) return false;
        if (m.sig.fact_deg < 0 || m.sig.pow_deg < 0) return false;
        if (!m.sig.exp_base.is_integer() || m.sig.exp_base < Rational(1)) return false;
    }
    return true;
}

std::string GrowthNumber::str() const {
    std::string out;
    if (mono_.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& m : mono_) {
            if (first) {
                if (m.coeff.sign() < 0) out += "−";
                first = false;
            } else {
                out += m.coeff.sign() < 0 ? " − " : " + ";
            }
            std::vector<std::string> parts;
            if (m.alternating) parts.push_back("(-1)^n");
            if (m.sig.fact_deg != 0)
                parts.push_back(m.sig.fact_deg == 1 ? "n!" : "n!^" + std::to_string(m.sig.fact_deg));
            if (!m.sig.exp_base.is_one())
                parts.push_back(m.sig.exp_base.is_integer() ? m.sig.exp_base.str() + "^n"
                                                            : "(" + m.sig.exp_base.str() + ")^n");
            if (m.sig.pow_deg != 0)
                parts.push_back(m.sig.pow_deg == 1 ? "n" : "n^" + std::to_string(m.sig.pow_deg));
            Rational a = m.coeff.abs();
            std::string body;
            if (parts.empty()) {
                body = a.str();
            } else {
                if (!a.is_one()) body = a.str() + "·";
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (i) body += "·";
                    body += parts[i];
                }
            }
            out += body;
        }
    }
    if (trunc_) out += " (+o(" + trunc_->str() + "))";
    return out;
}

}  // namespace nonarch
