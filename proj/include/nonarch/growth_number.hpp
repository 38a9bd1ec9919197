#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/classification.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

/// Growth signature (m, b, d) of the monomial (n!)^m · b^n · n^d, ordered
/// lexicographically; higher signatures dominate eventually. (0, 1, 0) is the
/// signature of the constants.
struct Signature {
    long fact_deg = 0;
    Rational exp_base = Rational(1);
    long pow_deg = 0;

    static Signature unit() { return {}; }

    /// Signature of a product of monomials.
    friend Signature operator+(const Signature& a, const Signature& b) {
        return {a.fact_deg + b.fact_deg, a.exp_base * b.exp_base, a.pow_deg + b.pow_deg};
    }
    Signature operator-() const { return {-fact_deg, exp_base.inverse(), -pow_deg}; }
    Signature times(long k) const { return {fact_deg * k, exp_base.pow(k), pow_deg * k}; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.fact_deg == b.fact_deg && a.exp_base == b.exp_base && a.pow_deg == b.pow_deg;
    }
    friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
        if (auto c = a.fact_deg <=> b.fact_deg; c != 0) return c;
        if (auto c = a.exp_base <=> b.exp_base; c != 0) return c;
        return a.pow_deg <=> b.pow_deg;
    }

    std::string str() const;
};

/// One closed-form sequence term c · (n!)^m · b^n · n^d, optionally carrying
/// an alternating factor (-1)^n.
struct GrowthMonomial {
    Rational coeff;
    Signature sig;
    bool alternating = false;

    /// Exact value at index n >= 1.
    Rational eval(unsigned long n) const;

    friend bool operator==(const GrowthMonomial&, const GrowthMonomial&) = default;
};

/// The decidable cofinite-filter fragment of the sequence ultrapower: finite
/// sums of growth monomials ordered by eventual dominance. Verdicts that would
/// need an ultrafilter choice (alternating leading terms) raise
/// SignIndeterminate instead of guessing; magnitude-only questions still
/// resolve for alternating elements.
class GrowthNumber {
  public:
    GrowthNumber() = default;  // exact zero

    static GrowthNumber from_rational(const Rational& r);
    static GrowthNumber monomial(const Rational& coeff, const Signature& sig, bool alternating = false);
    /// ε = the sequence 1/n.
    static GrowthNumber eps() { return monomial(1, {0, Rational(1), -1}); }
    /// N = the sequence n; satisfies ε · N = 1 exactly.
    static GrowthNumber inf_n() { return monomial(1, {0, Rational(1), 1}); }

    const std::vector<GrowthMonomial>& monomials() const { return mono_; }
    const std::optional<Signature>& truncation_sig() const { return trunc_; }

    bool is_exact_zero() const { return mono_.empty() && !trunc_; }
    bool has_terms() const { return !mono_.empty(); }
    const GrowthMonomial& leading() const;

    friend GrowthNumber operator+(const GrowthNumber& a, const GrowthNumber& b);
    friend GrowthNumber operator-(const GrowthNumber& a, const GrowthNumber& b);
    friend GrowthNumber operator*(const GrowthNumber& a, const GrowthNumber& b);
    GrowthNumber operator-() const;

    GrowthNumber scaled(const Rational& c) const;

    /// Multiplicative inverse to Neumann depth K; leading monomial inverted
    /// exactly. Requires a non-alternating leading monomial.
    GrowthNumber inverse(int depth) const;

    /// p-th root to depth K; the leading signature must divide by p and the
    /// leading coefficient and base must have rational p-th roots.
    GrowthNumber root(unsigned long p, int depth) const;

    GrowthNumber pow(long e, int depth) const;

    /// Eventual-dominance order. Throws SignIndeterminate when the verdict
    /// would depend on an ultrafilter choice, PrecisionExhausted when stored
    /// terms cancel into the truncation region.
    std::strong_ordering compare(const GrowthNumber& other) const;

    GrowthNumber abs() const;

    Classification classify() const;
    Cert omega_status() const;

    /// Eventual sign (+1/-1/0) when the cofinite fragment decides it.
    std::optional<int> eventual_sign() const;

    /// Exact value of the stored part at index n >= 1.
    Rational eval(unsigned long n) const;

    /// Explicit index n0 with |x(n)| < 1/k for all n >= n0, certified by exact
    /// evaluation at n0 plus per-monomial ratio monotonicity beyond it.
    unsigned long null_certificate(unsigned long k) const;

    /// Does the element qualify as a hyperinteger upper index: a
    /// nonnegative-integer combination of N-powers, b^N (integer b >= 1) and N!?
    bool eventually_integer() const;

    GrowthNumber truncated_below(const Signature& bound) const;

    /// Forget everything at or beyond the order of delta^k. Hidden terms must
    /// sit strictly below the truncation signature, so the recorded bound is
    /// the signature of delta^{k-1}.
    GrowthNumber truncated_at_order(const GrowthNumber& delta, long k) const {
        return truncated_below(delta.leading().sig.times(k - 1));
    }

    /// True when every tracked coefficient is zero and any unknown tail sits
    /// strictly beyond (below) the signature of delta^k.
    bool vanishes_beyond(const GrowthNumber& delta, long k) const {
        if (!mono_.empty()) return false;
        return !trunc_ || *trunc_ <= delta.leading().sig.times(k);
    }

    friend bool operator==(const GrowthNumber& a, const GrowthNumber& b) {
        return a.mono_ == b.mono_ && a.trunc_ == b.trunc_;
    }

    /// Bit-exact rendering, e.g. "n^-1 − n^-2 + n^-3 (+o((0,1,-4)))".
    std::string str() const;

    static std::string backend_name() { return "seq"; }

  private:
    GrowthNumber(std::vector<GrowthMonomial> mono, std::optional<Signature> trunc);
    void normalize();

    std::vector<GrowthMonomial> mono_;   // strictly descending by (sig, alternating)
    std::optional<Signature> trunc_;     // omitted terms strictly below this signature
};

}  // namespace nonarch
