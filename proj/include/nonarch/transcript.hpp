#pragma once

#include <string>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// One checked step of a derivation replay. Every verdict is the result of an
/// executed classification or comparison, never an assertion.
struct TranscriptStep {
    std::string statement;
    std::string lhs;
    std::string rhs;
    bool close = true;  // relation: infinitely-close (≈) vs exact (=)
    bool passed = false;
    std::string ref;  // citation into the replayed source text
};

/// Ordered, serializable record of a derivation replay.
struct Transcript {
    std::string title;
    Rational v;
    long k = 0;
    std::string backend;
    std::vector<TranscriptStep> steps;
    std::string footer;

    bool passed() const;

    /// One step per line: "[ 3] C(N,2)·(z/N)^2 ≈ z^2/2! — PASS (Introductio I, §116)".
    std::string render_text() const;

    /// Canonical JSON document (stable key order, two-space indent).
    std::string render_json() const;
};

}  // namespace nonarch
