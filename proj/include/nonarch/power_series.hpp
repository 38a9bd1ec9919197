#pragma once

#include <string>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// Named Taylor generators at 0.
enum class TaylorName { exp, sin, cos, log1p, atan, atanh, arcsin };

/// Exact truncated formal power series x^r · (a_0 + a_1 x + ... + a_K x^K)
/// over the rationals. The fractional offset r exists solely to host the
/// x^{-1/2} prefactor of the classical arc-length computation; every other
/// operation expects offset 0.
class PowerSeries {
  public:
    explicit PowerSeries(long order) : coeffs_(order + 1, Rational(0)) {}
    PowerSeries(std::vector<Rational> coeffs, Rational offset = Rational(0));

    static PowerSeries constant(const Rational& c, long order);
    static PowerSeries identity(long order);  // x
    static PowerSeries taylor(TaylorName name, long order);
    static PowerSeries taylor(const std::string& name, long order);  // throws UnknownName
    /// Σ C(alpha, k) x^k, the binomial series (1 + x)^alpha.
    static PowerSeries binomial_series(const Rational& alpha, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& offset() const { return offset_; }
    const Rational& coeff(long i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator/(const PowerSeries& f, const PowerSeries& g);
    PowerSeries operator-() const;
    PowerSeries scaled(const Rational& c) const;

    /// f ∘ g; g must have zero constant term and both offsets must be 0.
    PowerSeries compose(const PowerSeries& g) const;

    /// Compositional inverse: g with f(g(x)) = x through the order.
    /// Requires a_0 = 0 and a_1 ≠ 0.
    PowerSeries revert() const;

    /// Termwise integration: a_i ↦ a_i / (i + r + 1), offset r + 1.
    PowerSeries integrate() const;

    /// Substitute x^2 for x and multiply by x: turns an arc series in
    /// sin² form into its odd form (order doubles plus one).
    PowerSeries odd_form() const;

    bool operator==(const PowerSeries&) const = default;

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rational> coeffs_;
    Rational offset_;
};

}  // namespace nonarch
