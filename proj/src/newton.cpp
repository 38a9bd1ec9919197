#include "nonarch/newton.hpp"

namespace nonarch {

NewtonPipeline run_newton_pipeline() {
    NewtonPipeline p{PowerSeries(0), PowerSeries(0), PowerSeries(0), PowerSeries(0)};

    // 1/(2√(x − x²)) = (1/2)·x^{-1/2}·(1 − x)^{-1/2}
    PowerSeries one_minus_x_pow = PowerSeries::binomial_series(Rational(-1, 2), 5)
                                      .compose(PowerSeries::identity(5).scaled(Rational(-1)));
    p.expansion = PowerSeries(one_minus_x_pow.scaled(Rational(1, 2)).coeffs(), Rational(-1, 2));
    p.arc = p.expansion.integrate();
    p.arcsin_odd = p.arc.odd_form();
    p.sine = p.arcsin_odd.revert();
    return p;
}

std::string newton_report() {
    NewtonPipeline p = run_newton_pipeline();
    std::string out = "NEWTON ARC-SINE PIPELINE\n";
    out += "binomial expansion of 1/(2·sqrt(x - x^2)):\n";
    out += "  " + p.expansion.str() + "\n";
    out += "note: the transcribed expansion in the source omits the x^(7/2) term; the oracle "
           "coefficient there is " + p.expansion.coeff(4).str() + "\n";
    out += "termwise integration (arc length):\n";
    out += "  " + p.arc.str() + "\n";
    out += "arcsin series coefficients (odd degrees):\n";
    for (long i = 0; i <= p.arc.order(); ++i)
        out += "  k=" + std::to_string(2 * i + 1) + ": " + p.arc.coeff(i).str() + "\n";
    out += "reversion (sine series coefficients):\n";
    for (long k = 1; k <= p.sine.order(); k += 2)
        out += "  k=" + std::to_string(k) + ": " + p.sine.coeff(k).str() + "\n";
    return out;
}

}  // namespace nonarch
