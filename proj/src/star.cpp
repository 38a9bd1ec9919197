#include "nonarch/star.hpp"

namespace nonarch {

bool de_moivre_check(unsigned n, long order) {
    if (n == 0) return false;
    PowerSeries c = PowerSeries::taylor(TaylorName::cos, order);
    PowerSeries s = PowerSeries::taylor(TaylorName::sin, order);

    PowerSeries re = PowerSeries::constant(1, order);
    PowerSeries im(order);
    for (unsigned i = 0; i < n; ++i) {
        PowerSeries re_next = re * c - im * s;
        im = re * s + im * c;
        re = re_next;
    }

    PowerSeries nx = PowerSeries::identity(order).scaled(Rational(static_cast<long>(n)));
    return re == c.compose(nx) && im == s.compose(nx);
}

}  // namespace nonarch
