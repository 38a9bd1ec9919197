#include "nonarch/power_series.hpp"

#include <algorithm>

#include "nonarch/errors.hpp"

namespace nonarch {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, Rational offset)
    : coeffs_(std::move(coeffs)), offset_(std::move(offset)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, long order) {
    PowerSeries f(order);
    f.coeffs_[0] = c;
    return f;
}

PowerSeries PowerSeries::identity(long order) {
    PowerSeries f(order);
    if (order >= 1) f.coeffs_[1] = Rational(1);
    return f;
}

namespace {

void require_same_offset(const PowerSeries& f, const PowerSeries& g) {
    if (!(f.offset() == g.offset()))
        fail(errc::offset_mismatch,
             "offsets " + f.offset().str() + " and " + g.offset().str() + " differ");
}

}  // namespace

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    require_same_offset(f, g);
    long order = std::min(f.order(), g.order());
    PowerSeries r(order);
    for (long i = 0; i <= order; ++i) r.coeffs_[i] = f.coeff(i) + g.coeff(i);
    r.offset_ = f.offset();
    return r;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    return f + (-g);
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    long order = std::min(f.order(), g.order());
    PowerSeries r(order);
    for (long i = 0; i <= order; ++i)
        for (long j = 0; i + j <= order && j <= g.order(); ++j)
            if (i <= f.order()) r.coeffs_[i + j] += f.coeff(i) * g.coeff(j);
    r.offset_ = f.offset() + g.offset();
    return r;
}

PowerSeries operator/(const PowerSeries& f, const PowerSeries& g) {
    bool g_zero = std::all_of(g.coeffs().begin(), g.coeffs().end(),
                              [](const Rational& c) { return c.is_zero(); });
    if (g_zero) fail(errc::zero_division, "division by the zero series");
    if (g.coeff(0).is_zero())
        fail(errc::zero_division, "divisor has no constant term; normalize offsets first");
    long order = std::min(f.order(), g.order());
    PowerSeries r(order);
    r.offset_ = f.offset() - g.offset();
    Rational inv0 = g.coeff(0).inverse();
    for (long i = 0; i <= order; ++i) {
        Rational acc = i <= f.order() ? f.coeff(i) : Rational(0);
        for (long j = 1; j <= i && j <= g.order(); ++j) acc -= g.coeff(j) * r.coeffs_[i - j];
        r.coeffs_[i] = acc * inv0;
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
    if (!offset_.is_zero() || !g.offset_.is_zero())
        fail(errc::offset_mismatch, "composition needs offset-free series");
    if (!g.coeff(0).is_zero())
        fail(errc::nonzero_constant, "inner series has constant term " + g.coeff(0).str());
    long order = std::min(this->order(), g.order());
    PowerSeries g_cut(order);
    for (long i = 0; i <= order; ++i) g_cut.coeffs_[i] = i <= g.order() ? g.coeff(i) : Rational(0);
    PowerSeries result = constant(coeff(this->order()), order);
    for (long i = this->order() - 1; i >= 0; --i) {
        result = result * g_cut;
        result.coeffs_[0] += coeff(i);
    }
    return result;
}

PowerSeries PowerSeries::revert() const {
    if (!offset_.is_zero()) fail(errc::offset_mismatch, "reversion needs an offset-free series");
    if (!coeff(0).is_zero())
        fail(errc::not_revertible, "series has constant term " + coeff(0).str());
    if (order() < 1 || coeff(1).is_zero())
        fail(errc::not_revertible, "series has no linear term");
    long K = order();
    Rational inv1 = coeff(1).inverse();
    std::vector<Rational> b(K + 1, Rational(0));
    b[1] = inv1;
    for (long d = 2; d <= K; ++d) {
        // with b_d still zero, the x^d coefficient of f∘g misses only a_1·b_d
        PowerSeries partial(std::vector<Rational>(b.begin(), b.begin() + d + 1));
        PowerSeries f_cut(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + d + 1));
        PowerSeries h = f_cut.compose(partial);
        b[d] = -h.coeff(d) * inv1;
    }
    return PowerSeries(std::move(b));
}

PowerSeries PowerSeries::integrate() const {
    PowerSeries r = *this;
    for (long i = 0; i <= order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational den = Rational(i) + offset_ + Rational(1);
        if (den.is_zero())
            fail(errc::logarithmic_term, "term at index " + std::to_string(i) + " integrates to a logarithm");
        r.coeffs_[i] = coeffs_[i] / den;
    }
    r.offset_ = offset_ + Rational(1);
    return r;
}

PowerSeries PowerSeries::odd_form() const {
    Rational two_r = offset_ * Rational(2);
    if (!two_r.is_nonneg_integer())
        fail(errc::offset_mismatch, "offset " + offset_.str() + " does not double to an integer");
    long shift = two_r.to_long();
    long K = 2 * order() + shift;
    std::vector<Rational> c(K + 1, Rational(0));
    for (long i = 0; i <= order(); ++i) c[2 * i + shift] = coeffs_[i];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::taylor(TaylorName name, long order) {
    PowerSeries f(order);
    for (long k = 0; k <= order; ++k) {
        Rational a(0);
        switch (name) {
            case TaylorName::exp:
                a = Rational(1) / Rational(factorial(k));
                break;
            case TaylorName::sin:
                if (k % 2 == 1) {
                    a = Rational(1) / Rational(factorial(k));
                    if (((k - 1) / 2) % 2 == 1) a = -a;
                }
                break;
            case TaylorName::cos:
                if (k % 2 == 0) {
                    a = Rational(1) / Rational(factorial(k));
                    if ((k / 2) % 2 == 1) a = -a;
                }
                break;
            case TaylorName::log1p:
                if (k >= 1) {
                    a = Rational(1, k);
                    if (k % 2 == 0) a = -a;
                }
                break;
            case TaylorName::atan:
                if (k % 2 == 1) {
                    a = Rational(1, k);
                    if (((k - 1) / 2) % 2 == 1) a = -a;
                }
                break;
            case TaylorName::atanh:
                if (k % 2 == 1) a = Rational(1, k);
                break;
            case TaylorName::arcsin:
                if (k % 2 == 1) {
                    long m = (k - 1) / 2;
                    a = Rational(binomial_int(2 * m, m)) / (Rational(4).pow(m) * Rational(k));
                }
                break;
        }
        f.coeffs_[k] = a;
    }
    return f;
}

PowerSeries PowerSeries::taylor(const std::string& name, long order) {
    if (name == "exp") return taylor(TaylorName::exp, order);
    if (name == "sin") return taylor(TaylorName::sin, order);
    if (name == "cos") return taylor(TaylorName::cos, order);
    if (name == "log1p") return taylor(TaylorName::log1p, order);
    if (name == "atan") return taylor(TaylorName::atan, order);
    if (name == "atanh") return taylor(TaylorName::atanh, order);
    if (name == "arcsin") return taylor(TaylorName::arcsin, order);
    fail(errc::unknown_name, "no Taylor generator named '" + name + "'");
}

PowerSeries PowerSeries::binomial_series(const Rational& alpha, long order) {
    PowerSeries f(order);
    for (long k = 0; k <= order; ++k) f.coeffs_[k] = binomial_general(alpha, k);
    return f;
}

std::string PowerSeries::str(const std::string& var) const {
    std::string body;
    bool first = true;
    for (long i = 0; i <= order(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) body += "−";
            first = false;
        } else {
            body += c.sign() < 0 ? " − " : " + ";
        }
        Rational a = c.abs();
        std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (power.empty())
            body += a.str();
        else
            body += a.is_one() ? power : a.str() + "·" + power;
    }
    if (first) body = "0";
    if (offset_.is_zero()) return body;
    std::string pre = offset_.is_one() ? var : var + "^(" + offset_.str() + ")";
    return pre + "·(" + body + ")";
}

}  // namespace nonarch
