#pragma once

#include <string>

#include "nonarch/rational.hpp"

namespace nonarch {

/// A decimal constant certified by an exact rational bracket:
/// lo <= value <= hi, and both endpoints truncate to the same digit string
/// at the stated precision.
struct DecimalWitness {
    Rational lo;
    Rational hi;
    std::string digits;  // e.g. "2.71828182845904523536028"
};

/// Certified decimal expansion with `digits` exact places after the point.
/// e comes from its factorial series with tail bound 2/(K+1)!; pi from the
/// arctangent combination 16·atan(1/5) − 4·atan(1/239) with alternating-series
/// brackets; ln 10 from 6·atanh(1/3) + 2·atanh(1/9) with geometric tail bounds.
/// digits is capped at 200.
DecimalWitness constant_e(unsigned digits);
DecimalWitness constant_pi(unsigned digits);
DecimalWitness constant_ln10(unsigned digits);

/// Dispatch on "e" | "pi" | "ln10"; throws UnknownName otherwise.
DecimalWitness constant_by_name(const std::string& name, unsigned digits);

/// log10(1000001/1000000), the classical table entry behind the choice of a
/// base-10 "infinitely small" exponent.
DecimalWitness log10_ratio_million(unsigned digits);

}  // namespace nonarch
