#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/classification.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

/// Finitely supported formal series in one infinitesimal generator ε with
/// rational exponents, ordered ε-adically: the term with the smallest exponent
/// dominates, and 0 < ε < r for every positive rational r.
///
/// An optional truncation order q★ records that terms of exponent >= q★ are
/// unknown. Exact elements (no truncation) are closed under +, -, ×; division
/// and roots truncate their Neumann/binomial tails but never the leading term,
/// so classification of their results is exact.
class LcNumber {
  public:
    /// (exponent, coefficient); exponents strictly increasing, coefficients nonzero.
    using Term = std::pair<Rational, Rational>;

    LcNumber() = default;  // exact zero

    static LcNumber from_rational(const Rational& r);
    static LcNumber monomial(const Rational& coeff, const Rational& exponent);
    /// The canonical infinitesimal generator ε.
    static LcNumber eps() { return monomial(1, 1); }
    /// The canonical infinite element N = 1/ε.
    static LcNumber inf_n() { return monomial(1, Rational(-1)); }

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Rational>& truncation_order() const { return trunc_; }

    bool is_exact_zero() const { return terms_.empty() && !trunc_; }
    bool has_terms() const { return !terms_.empty(); }
    const Rational& leading_exponent() const;
    const Rational& leading_coeff() const;

    friend LcNumber operator+(const LcNumber& a, const LcNumber& b);
    friend LcNumber operator-(const LcNumber& a, const LcNumber& b);
    friend LcNumber operator*(const LcNumber& a, const LcNumber& b);
    LcNumber operator-() const;

    LcNumber scaled(const Rational& c) const;

    /// Multiplicative inverse to Neumann depth K; leading term exact.
    LcNumber inverse(int depth) const;

    /// p-th root via the binomial series to depth K; leading term exact.
    /// Requires a positive leading coefficient with a rational p-th root.
    LcNumber root(unsigned long p, int depth) const;

    /// Integer power; negative exponents route through inverse(depth).
    LcNumber pow(long e, int depth) const;

    /// Total order by the sign of the leading coefficient of the difference.
    /// Throws PrecisionExhausted when every stored term cancels under a
    /// truncation bound that could hide further terms.
    std::strong_ordering compare(const LcNumber& other) const;

    LcNumber abs() const;

    Classification classify() const;

    /// Is |x| certifiably infinitesimal-or-zero / certifiably not / unknown?
    Cert omega_status() const;

    /// Drop knowledge at exponents >= bound.
    LcNumber truncated_at(const Rational& bound) const;

    /// Forget everything at or beyond the order of delta^k (delta must have a
    /// leading term).
    LcNumber truncated_at_order(const LcNumber& delta, long k) const {
        return truncated_at(delta.leading_exponent() * Rational(k));
    }

    /// True when every tracked coefficient is zero and any unknown tail sits
    /// strictly beyond the order of delta^k.
    bool vanishes_beyond(const LcNumber& delta, long k) const {
        if (!terms_.empty()) return false;
        return !trunc_ || *trunc_ > delta.leading_exponent() * Rational(k);
    }

    /// Structural equality (same stored terms and truncation bound).
    friend bool operator==(const LcNumber& a, const LcNumber& b) {
        return a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
    }

    /// Bit-exact rendering, e.g. "1 + ε + ε^2 (+O(ε^4))".
    std::string str() const;

    static std::string backend_name() { return "lc"; }

  private:
    LcNumber(std::vector<Term> terms, std::optional<Rational> trunc);
    void normalize();

    std::vector<Term> terms_;
    std::optional<Rational> trunc_;
};

}  // namespace nonarch
