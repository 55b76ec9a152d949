#ifndef SLP_HARNESS_HPP
#define SLP_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "slp/monomial.hpp"

namespace slp {

struct PropertyStat {
    long checks = 0;
    long violations = 0;
    std::string first_violation;  // instance and detail of the first failure
};

/// Aggregate result of the randomized property run. Deterministic for a
/// given (seed, trials, max_vars, max_socle): identical counters, identical
/// first_violation strings.
struct HarnessReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int max_vars = 0;
    int max_socle = 0;
    int witness_trials = 0;

    int instances = 0;
    int witnesses_found = 0;
    long forms_cross_checked = 0;
    long non_slp_forms_checked = 0;  // checked forms that failed the property
    int tensor_pairs_checked = 0;

    // observed minimal failing extension orders vs the closed-form guess
    // min(gap_left, gap_right) + 2 over the widest off-center pair
    int failing_m_observed = 0;
    int failing_m_matches_gap_formula = 0;

    std::map<std::string, PropertyStat> properties;

    void note(const std::string& property, bool ok, const std::string& detail);
    bool all_pass() const;
    long total_violations() const;
    std::string summary() const;
};

/// Runs the full property battery: a pinned known instance first, then
/// `trials` random Artinian monomial ideals over the rationals.
HarnessReport run_harness(std::uint64_t seed, int trials, int max_vars, int max_socle,
                          int witness_trials = 6);

/// The pinned first instance: the two-variable quotient whose decomposition
/// is totally ordered but not almost centered, with minimal failing
/// extension order 3.
MonomialIdeal pinned_harness_ideal();

}  // namespace slp

#endif
