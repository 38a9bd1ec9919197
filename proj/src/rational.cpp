#include "nonarch/rational.hpp"

#include <cctype>

namespace nonarch {

Rational::Rational(long num, long den) {
    if (den == 0) fail(errc::zero_division, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(errc::zero_division, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(errc::syntax_error, "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail(errc::syntax_error, "malformed rational literal '" + s + "'");
    }
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) fail(errc::zero_division, "inverse of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) fail(errc::zero_division, "zero to a negative power");
        return Rational(0);
    }
    unsigned long mag = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), mag);
    return e < 0 ? Rational(den, num) : Rational(num, den);
}

std::optional<Rational> Rational::nth_root(unsigned long p) const {
    if (p == 0) fail(errc::non_rational_root, "zeroth root");
    if (is_zero()) return Rational(0);
    if (sign() < 0 && p % 2 == 0) return std::nullopt;
    mpz_class num_root, den_root;
    int num_exact = mpz_root(num_root.get_mpz_t(), v_.get_num().get_mpz_t(), p);
    int den_exact = mpz_root(den_root.get_mpz_t(), v_.get_den().get_mpz_t(), p);
    if (!num_exact || !den_exact) return std::nullopt;
    return Rational(num_root, den_root);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        fail(errc::syntax_error, "value " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial_int(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational binomial_general(const Rational& alpha, unsigned long k) {
    Rational num(1);
    for (unsigned long i = 0; i < k; ++i) num *= alpha - Rational(static_cast<long>(i));
    return num / Rational(factorial(k));
}

}  // namespace nonarch
