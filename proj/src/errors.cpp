#include "nonarch/errors.hpp"

namespace nonarch {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::sign_indeterminate: return "SignIndeterminate";
        case errc::shadow_irrational: return "ShadowIrrational";
        case errc::not_finite: return "NotFinite";
        case errc::zero_division: return "ZeroDivision";
        case errc::non_rational_root: return "NonRationalRoot";
        case errc::negative_base: return "NegativeBase";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::not_infinitesimal: return "NotInfinitesimal";
        case errc::unit_ratio: return "UnitRatio";
        case errc::not_eventually_integer: return "NotEventuallyInteger";
        case errc::unsupported_backend: return "UnsupportedBackend";
        case errc::not_near_one: return "NotNearOne";
        case errc::exponent_too_large: return "ExponentTooLarge";
        case errc::not_revertible: return "NotRevertible";
        case errc::nonzero_constant: return "NonzeroConstant";
        case errc::offset_mismatch: return "OffsetMismatch";
        case errc::logarithmic_term: return "LogarithmicTerm";
        case errc::unknown_name: return "UnknownName";
        case errc::precision_cap: return "PrecisionCap";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_identifier: return "UnknownIdentifier";
        case errc::unknown_law: return "UnknownLaw";
    }
    return "Error";
}

}  // namespace nonarch
