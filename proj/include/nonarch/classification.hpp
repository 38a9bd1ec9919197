#pragma once

#include <optional>
#include <string>

#include "nonarch/rational.hpp"

namespace nonarch {

/// The four mutually exclusive magnitude classes of a field element.
/// Zero and Infinitesimal together form the infinitesimal set; Appreciable
/// elements sit strictly between 1/n and n for some positive integer n;
/// Infinite elements exceed every positive integer in absolute value.
enum class Tag { zero, infinitesimal, appreciable, infinite };

/// Certification of membership in the infinitesimal set (|x| below every 1/n,
/// zero included). `unknown` means a truncation bound hides the answer.
enum class Cert { yes, no, unknown };

const char* tag_name(Tag t) noexcept;

struct Classification {
    Tag tag;
    /// Present exactly for appreciable elements with a rational shadow.
    std::optional<Rational> shadow;

    bool is_omega() const { return tag == Tag::zero || tag == Tag::infinitesimal; }
    bool is_finite() const { return tag != Tag::infinite; }

    /// "Infinitesimal", "Appreciable(shadow 1/2)", ...
    std::string str() const;

    static Classification zero() { return {Tag::zero, std::nullopt}; }
    static Classification infinitesimal() { return {Tag::infinitesimal, std::nullopt}; }
    static Classification appreciable(Rational shadow_value) {
        return {Tag::appreciable, std::move(shadow_value)};
    }
    static Classification infinite() { return {Tag::infinite, std::nullopt}; }
};

}  // namespace nonarch
