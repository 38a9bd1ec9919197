#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/growth_number.hpp"

namespace nonarch {

/// Outcome of a hyperfinite geometric sum Σ_{j=0}^{upper} a^j evaluated by its
/// closed form (1 − a^{upper+1})/(1 − a). The error term is the deviation from
/// the formal sum 1/(1 − a); its classification is the verdict.
struct HyperfiniteSumResult {
    GrowthNumber closed_form;
    std::optional<Rational> shadow_value;  // 1/(1−a) when the error is infinitesimal
    GrowthNumber error_term;               // closed_form − 1/(1−a), exactly
    Classification verdict;                // classification of error_term
    /// k ↦ n₀ certificates for the error-term numerator a^{upper+1} (present
    /// when it is infinitesimal).
    std::vector<std::pair<unsigned long, unsigned long>> certificate;

    /// "closed = …; shadow = …; error ∈ Ω (certificate: k ↦ n₀ table)"
    std::string str() const;
};

/// Hyperfinite geometric sum with an infinite (or finite) hyperinteger upper
/// index. The upper index must pass the eventually-integer check and be affine
/// in N, since a^{upper+1} must itself live in the growth grammar.
HyperfiniteSumResult geom_hyperfinite_sum(const Rational& a, const GrowthNumber& upper);

/// Σ_{j=0}^{upper} 1 = upper + 1, the degenerate unit-ratio path.
GrowthNumber arithmetic_sum(const GrowthNumber& upper);

/// Explicit index n₀ such that the geometric error term a^{upper+1} stays
/// below 1/k in magnitude for all n >= n₀ — the executable content of "the
/// error is infinitely small and can safely be neglected". Requires |a| < 1.
unsigned long sum_shadow_theorem(const Rational& a, const GrowthNumber& upper, unsigned long k);

}  // namespace nonarch
