#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "nonarch/errors.hpp"

namespace nonarch {

/// Exact arbitrary-precision fraction in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1. The coefficient domain of every backend.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): literals read naturally
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "a" or "a/b" (optional leading '-').
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sign() >= 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational inverse() const;

    /// x^e for integer e (negative allowed; 0^negative throws).
    Rational pow(long e) const;

    /// Exact p-th root if one exists in the rationals.
    std::optional<Rational> nth_root(unsigned long p) const;

    long to_long() const;  // requires integer fitting in long

    /// floor(x): largest integer <= x.
    mpz_class floor() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(errc::zero_division, "rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Canonical form "a" or "a/b".
    std::string str() const;

  private:
    explicit Rational(const mpq_class& v) : v_(v) { /* mpq arithmetic keeps canonical form */ }

    mpq_class v_;
};

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// Binomial coefficient over the integers, C(n, k).
mpz_class binomial_int(unsigned long n, unsigned long k);

/// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!.
Rational binomial_general(const Rational& alpha, unsigned long k);

}  // namespace nonarch
