#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streaklab/gamelog.hpp"
#include "streaklab/streaks.hpp"

namespace streaklab {

struct StudyConfig {
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    bool starts_only = false;
    int min_length = 1;
    // Execution hint only; the result is identical for every thread count.
    unsigned thread_hint = 0;  // 0 = hardware concurrency
};

struct LengthAggregate {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n-1) across trials
    std::uint32_t min = 0;
    std::uint32_t max = 0;
};

// Per-length study results plus the raw per-trial totals they were computed
// from. Means and SDs are always reduced in trial order from that table, so
// the aggregate is bit-identical however the trials were scheduled.
struct TrialAggregate {
    StudyConfig config;
    int min_length = 1;
    int max_length = 0;  // longest possible streak in the filtered corpus
    std::vector<LengthAggregate> exact;       // index 0 -> min_length
    std::vector<LengthAggregate> cumulative;  // index 0 -> min_length
    // per_trial_exact[t][i]: corpus-wide count of maximal streaks of exactly
    // (min_length + i) games in trial t.
    std::vector<std::vector<std::uint32_t>> per_trial_exact;
    std::size_t logs_used = 0;
    std::size_t logs_skipped_empty = 0;

    std::size_t lengths() const { return exact.size(); }
    const LengthAggregate& exact_at(int length) const;
    const LengthAggregate& cumulative_at(int length) const;
    // Column of per-trial cumulative totals for one tail.
    std::vector<std::uint32_t> per_trial_cumulative(int length) const;
};

// Deterministic, schedule-independent seed for one (player-season, trial).
std::uint64_t derive_trial_seed(std::uint64_t master_seed, const std::string& player_id,
                                int season, std::uint64_t trial_index);

// Uniformly random reordering of the log's lines (all n! orderings equally
// likely), driven by a generator seeded with `seed`. The multiset of lines is
// preserved exactly.
PlayerSeasonLog shuffle_log(const PlayerSeasonLog& log, std::uint64_t seed);

// The permutation study: for every trial, reshuffle each player-season log
// independently, count maximal streaks, sum corpus-wide, then aggregate
// across trials. Eligibility is always applied; the starts filter when
// config.starts_only. Logs that filter to nothing are skipped and counted.
TrialAggregate run_study(const Corpus& corpus, const StudyConfig& config);

struct ConvergenceRow {
    int length = 0;
    double mean_first = 0.0;
    double mean_second = 0.0;
    double sd_first = 0.0;
    double sd_second = 0.0;
    double abs_diff = 0.0;
    double sd_norm_diff = 0.0;  // abs_diff / full-study sd (0 when both are 0)
    bool converged = false;     // abs_diff <= 0.1 * full-study sd
};

struct ConvergenceReport {
    std::uint64_t first_half = 0;
    std::uint64_t second_half = 0;
    std::vector<ConvergenceRow> exact;
    std::vector<ConvergenceRow> cumulative;
    bool all_converged = true;
};

// First-half vs second-half agreement of the per-trial totals. Requires at
// least two trials.
ConvergenceReport convergence_split(const TrialAggregate& agg);

}  // namespace streaklab
