#pragma once

#include <string>

#include "nonarch/power_series.hpp"

namespace nonarch {

/// The classical arc-length pipeline: binomial expansion of 1/(2√(x − x²)),
/// termwise integration, and reversion of the resulting arc series into the
/// sine series.
struct NewtonPipeline {
    PowerSeries expansion;    // offset −1/2, six coefficients
    PowerSeries arc;          // offset +1/2, the integrated series
    PowerSeries arcsin_odd;   // odd-degree arcsin series through x^11
    PowerSeries sine;         // its compositional inverse
};

NewtonPipeline run_newton_pipeline();

/// Human-readable report with the coefficient tables and the note about the
/// transcription gap at the x^(7/2) term.
std::string newton_report();

}  // namespace nonarch
