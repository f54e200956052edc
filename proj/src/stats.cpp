#include "streaklab/stats.hpp"

#include <cmath>
#include <limits>

namespace streaklab {

namespace {

constexpr long double kSqrt2 = 1.41421356237309504880168872420969808L;
constexpr long double kLn10 = 2.30258509299404568401799145468436421L;
constexpr long double kLnSqrt2Pi = 0.91893853320467274178032973640561764L;

ComparisonRow make_row(std::string label, std::uint64_t observed, double mean, double sd) {
    ComparisonRow row;
    row.label = std::move(label);
    row.observed = observed;
    row.null_mean = mean;
    row.null_sd = sd;
    if (sd > 0.0) {
        row.z = (static_cast<double>(observed) - mean) / sd;
        row.p_upper = upper_tail(row.z);
        row.p_upper_log10 = log10_upper_tail(row.z);
    } else {
        row.degenerate = true;
        row.z = std::numeric_limits<double>::quiet_NaN();
        row.p_upper = std::numeric_limits<long double>::quiet_NaN();
        row.p_upper_log10 = std::numeric_limits<double>::quiet_NaN();
    }
    row.excess_ratio = mean > 0.0 ? static_cast<double>(observed) / mean - 1.0
                                  : std::numeric_limits<double>::quiet_NaN();
    return row;
}

}  // namespace

double zscore(double observed, double null_mean, double null_sd) {
    if (null_sd < 0.0) throw DomainError("null_sd must be >= 0");
    if (null_sd == 0.0) {
        if (observed == null_mean) return 0.0;
        throw DomainError("degenerate null: sd = 0 but observed differs from the mean");
    }
    return (observed - null_mean) / null_sd;
}

long double upper_tail(double z) {
    return 0.5L * std::erfc(static_cast<long double>(z) / kSqrt2);
}

double log10_upper_tail(double z) {
    const long double q = upper_tail(z);
    if (q > 0.0L) return static_cast<double>(std::log10(q));
    // q underflowed even long double (z beyond ~150): first-order asymptotic
    // ln Q(z) = -z^2/2 - ln(z) - ln(sqrt(2 pi)) + ln(1 - 1/z^2 + ...)
    const long double x = z;
    const long double ln_q = -x * x / 2.0L - std::log(x) - kLnSqrt2Pi + std::log1p(-1.0L / (x * x));
    return static_cast<double>(ln_q / kLn10);
}

std::vector<ComparisonRow> comparison_table(const StreakCensus& observed,
                                            const TrialAggregate& null_agg,
                                            std::span<const int> tails) {
    if (observed.min_length() != null_agg.min_length)
        throw CoverageError("observed census and study table disagree on min_length (" +
                            std::to_string(observed.min_length()) + " vs " +
                            std::to_string(null_agg.min_length) + ")");
    if (observed.max_length() > null_agg.max_length)
        throw CoverageError("observed census has streaks of length " +
                            std::to_string(observed.max_length()) +
                            ", beyond the study table (max " +
                            std::to_string(null_agg.max_length) + ")");

    std::vector<ComparisonRow> rows;
    for (int len = null_agg.min_length; len <= null_agg.max_length; ++len) {
        const LengthAggregate& a = null_agg.exact_at(len);
        rows.push_back(make_row(std::to_string(len), observed.exact(len), a.mean, a.sd));
    }
    for (int tail : tails) {
        const LengthAggregate& a = null_agg.cumulative_at(tail);  // throws CoverageError
        rows.push_back(make_row(std::to_string(tail) + "+", observed.cumulative(tail), a.mean, a.sd));
    }
    return rows;
}

EmpiricalTail empirical_tail(std::span<const std::uint32_t> per_trial_totals,
                             std::uint64_t observed) {
    if (per_trial_totals.empty()) throw DomainError("empirical tail needs per-trial totals");
    EmpiricalTail out;
    out.trials = per_trial_totals.size();
    for (std::uint32_t total : per_trial_totals)
        if (total >= observed) ++out.ge_count;
    out.p = static_cast<double>(out.ge_count + 1) / static_cast<double>(out.trials + 1);
    out.saturated = out.ge_count == 0;
    return out;
}

}  // namespace streaklab
