#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nonarch/field.hpp"
#include "nonarch/growth_number.hpp"
#include "nonarch/lc_number.hpp"

namespace nonarch {

/// Outcome of running one law of the registry on one backend. A report passes
/// only with zero failures and (by default) zero inconclusive trials;
/// truncation-related refusals count as inconclusive, never as passes.
struct LawReport {
    std::string law_id;
    std::string backend;
    unsigned long trials = 0;
    unsigned long successes = 0;
    unsigned long inconclusive = 0;
    std::vector<std::string> failures;   // pretty-printed counterexamples
    std::vector<std::string> witnesses;  // constructed witnesses for ∃-laws
    bool allow_inconclusive = false;

    bool passed() const {
        return failures.empty() && (allow_inconclusive || inconclusive == 0);
    }

    /// "LAW omega-mul-closure [lc] 1000/1000 PASS"
    std::string line() const;
    std::string to_json() const;
};

/// The twelve executable laws.
const std::vector<std::string>& law_registry();

/// Deterministic element generator: one stream per (seed); identical seeds
/// yield identical samples on every run.
template <FieldBackend F>
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational nonzero_rational(long bound = 5) {
        long num = pick(1, bound) * (pick(0, 1) ? 1 : -1);
        return Rational(num, pick(1, 3));
    }

    Rational positive_rational(long bound = 5) { return Rational(pick(1, bound), pick(1, 3)); }

    /// An element of the requested magnitude class.
    F sample(Tag cls);

    /// Class-mixed sample (infinitesimal, appreciable, or infinite).
    F sample_mixed() {
        switch (pick(0, 2)) {
            case 0: return sample(Tag::infinitesimal);
            case 1: return sample(Tag::appreciable);
            default: return sample(Tag::infinite);
        }
    }

  private:
    std::mt19937_64 rng_;
};

template <>
LcNumber Sampler<LcNumber>::sample(Tag cls);
template <>
GrowthNumber Sampler<GrowthNumber>::sample(Tag cls);

/// Runs `law_id` for `trials` seeded trials; per-trial seeds are seed + index.
template <FieldBackend F>
LawReport run_law(const std::string& law_id, std::uint64_t seed, unsigned long trials, int depth,
                  bool allow_inconclusive = false);

/// Convenience: the whole registry in order.
template <FieldBackend F>
std::vector<LawReport> run_all_laws(std::uint64_t seed, unsigned long trials, int depth,
                                    bool allow_inconclusive = false) {
    std::vector<LawReport> reports;
    for (const auto& id : law_registry())
        reports.push_back(run_law<F>(id, seed, trials, depth, allow_inconclusive));
    return reports;
}

}  // namespace nonarch
