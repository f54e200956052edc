#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "streaklab/permute.hpp"
#include "streaklab/streaks.hpp"

namespace streaklab {

// (observed - null_mean) / null_sd. null_sd = 0 is allowed only when the
// observation sits exactly on the mean (z = 0); otherwise DomainError.
double zscore(double observed, double null_mean, double null_sd);

// One-sided P(Z >= z) for standard normal Z, via the complementary error
// function in extended precision. Naive 1 - CDF loses everything past z ~ 8;
// this stays within fractions of a percent out to |z| = 40 and beyond, which
// is why it returns long double (tails like 1e-349 underflow a double).
long double upper_tail(double z);

// log10 of upper_tail, with an asymptotic fallback once even long double
// underflows. Safe for any z.
double log10_upper_tail(double z);

struct ComparisonRow {
    std::string label;  // "12" for an exact length, "20+" for a cumulative tail
    std::uint64_t observed = 0;
    double null_mean = 0.0;
    double null_sd = 0.0;
    double z = 0.0;
    long double p_upper = 0.5L;
    double p_upper_log10 = 0.0;
    double excess_ratio = 0.0;  // observed / null_mean - 1
    bool degenerate = false;    // null_sd == 0; z/p fields are meaningless
};

// Observed census against the permutation null: one row per exact length in
// the study table plus one per requested cumulative tail. The census and the
// study must share min_length, and the observed lengths must be covered by
// the study table (CoverageError otherwise).
std::vector<ComparisonRow> comparison_table(const StreakCensus& observed,
                                            const TrialAggregate& null_agg,
                                            std::span<const int> tails);

struct EmpiricalTail {
    double p = 1.0;          // (k+1)/(T+1), k = trials with total >= observed
    bool saturated = false;  // k = 0: the true tail is below 1/(T+1) resolution
    std::uint64_t ge_count = 0;
    std::uint64_t trials = 0;
};

// Distribution-free tail estimate from the raw trial totals; the +1s keep it
// from reporting an exact zero that T trials cannot support.
EmpiricalTail empirical_tail(std::span<const std::uint32_t> per_trial_totals,
                             std::uint64_t observed);

}  // namespace streaklab
