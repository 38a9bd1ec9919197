#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

/// Error codes shared by every module; the CLI maps them onto exit codes.
enum class errc {
    sign_indeterminate,    // eventual sign not decided by the cofinite fragment
    shadow_irrational,     // element is appreciable but has no rational shadow
    not_finite,
    zero_division,
    non_rational_root,
    negative_base,
    precision_exhausted,   // truncation hides the answer; recompute at higher depth
    not_infinitesimal,
    unit_ratio,
    not_eventually_integer,
    unsupported_backend,
    not_near_one,
    exponent_too_large,
    not_revertible,
    nonzero_constant,
    offset_mismatch,
    logarithmic_term,
    unknown_name,
    precision_cap,
    syntax_error,
    unknown_identifier,
    unknown_law,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace nonarch
