#include "streaklab/permute.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "streaklab/rng.hpp"

namespace streaklab {

namespace {

// One player-season prepared for fast reshuffling: only the hit indicators
// matter for streak counting, so trials shuffle a byte vector instead of
// whole batting lines. The same Fisher-Yates over the same seeded generator
// picks the same permutation indices either way, so censuses match
// shuffle_log bit for bit.
struct CompiledLog {
    std::string player_id;
    int season = 0;
    std::vector<std::uint8_t> hits;
    // Census is permutation-invariant when every game (or no game) is a hit
    // game: fixed_run holds that constant streak length, -1 otherwise.
    int fixed_run = -1;
};

void count_runs(const std::vector<std::uint8_t>& hits, int min_length,
                std::vector<std::uint32_t>& row) {
    int run = 0;
    for (std::uint8_t h : hits) {
        if (h) {
            ++run;
        } else {
            if (run >= min_length) ++row[run - min_length];
            run = 0;
        }
    }
    if (run >= min_length) ++row[run - min_length];
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

// Two-pass mean/SD over a strided column of the per-trial table.
template <class Get>
MeanSd column_mean_sd(std::uint64_t count, Get&& get) {
    MeanSd out;
    if (count == 0) return out;
    double sum = 0.0;
    for (std::uint64_t t = 0; t < count; ++t) sum += static_cast<double>(get(t));
    out.mean = sum / static_cast<double>(count);
    if (count > 1) {
        double ss = 0.0;
        for (std::uint64_t t = 0; t < count; ++t) {
            const double d = static_cast<double>(get(t)) - out.mean;
            ss += d * d;
        }
        out.sd = std::sqrt(ss / static_cast<double>(count - 1));
    }
    return out;
}

}  // namespace

const LengthAggregate& TrialAggregate::exact_at(int length) const {
    const int i = length - min_length;
    if (i < 0 || static_cast<std::size_t>(i) >= exact.size())
        throw CoverageError("length " + std::to_string(length) + " outside the study table");
    return exact[i];
}

const LengthAggregate& TrialAggregate::cumulative_at(int length) const {
    const int i = length - min_length;
    if (i < 0 || static_cast<std::size_t>(i) >= cumulative.size())
        throw CoverageError("length " + std::to_string(length) + " outside the study table");
    return cumulative[i];
}

std::vector<std::uint32_t> TrialAggregate::per_trial_cumulative(int length) const {
    const int i = length - min_length;
    if (i < 0 || static_cast<std::size_t>(i) >= exact.size())
        throw CoverageError("length " + std::to_string(length) + " outside the study table");
    std::vector<std::uint32_t> out(per_trial_exact.size(), 0);
    for (std::size_t t = 0; t < per_trial_exact.size(); ++t) {
        std::uint32_t sum = 0;
        for (std::size_t j = i; j < per_trial_exact[t].size(); ++j) sum += per_trial_exact[t][j];
        out[t] = sum;
    }
    return out;
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, const std::string& player_id,
                                int season, std::uint64_t trial_index) {
    return derive_stream_seed(master_seed, player_id, season, trial_index);
}

PlayerSeasonLog shuffle_log(const PlayerSeasonLog& log, std::uint64_t seed) {
    PlayerSeasonLog out = log;
    StreamRng rng(seed);
    fisher_yates_shuffle(out.lines, rng);
    return out;
}

TrialAggregate run_study(const Corpus& corpus, const StudyConfig& config) {
    if (config.trials < 1) throw ConfigError("trials must be >= 1");
    if (config.min_length < 1) throw ConfigError("min_length must be >= 1");

    std::vector<CompiledLog> logs;
    std::size_t skipped = 0;
    std::size_t max_len = 0;
    for (const auto& [key, raw_log] : corpus.logs) {
        std::optional<PlayerSeasonLog> log =
            config.starts_only ? starts_filter(raw_log) : std::optional<PlayerSeasonLog>(raw_log);
        if (log.has_value()) log = eligibility_filter(*log);
        if (!log.has_value()) {
            ++skipped;
            continue;
        }
        CompiledLog cl;
        cl.player_id = log->player_id;
        cl.season = log->season;
        cl.hits.reserve(log->lines.size());
        std::size_t hit_games = 0;
        for (const BattingLine& bl : log->lines) {
            cl.hits.push_back(bl.hit_game() ? 1 : 0);
            if (bl.hit_game()) ++hit_games;
        }
        if (hit_games == 0)
            cl.fixed_run = 0;
        else if (hit_games == cl.hits.size())
            cl.fixed_run = static_cast<int>(cl.hits.size());
        max_len = std::max(max_len, cl.hits.size());
        logs.push_back(std::move(cl));
    }
    if (logs.empty()) throw Error("corpus is empty after filtering");
    if (static_cast<std::size_t>(config.min_length) > max_len)
        throw ConfigError("min_length " + std::to_string(config.min_length) +
                          " exceeds the longest possible streak (" + std::to_string(max_len) + ")");

    TrialAggregate agg;
    agg.config = config;
    agg.min_length = config.min_length;
    agg.max_length = static_cast<int>(max_len);
    agg.logs_used = logs.size();
    agg.logs_skipped_empty = skipped;

    const std::size_t width = max_len - config.min_length + 1;
    const std::uint64_t trials = config.trials;
    agg.per_trial_exact.assign(trials, std::vector<std::uint32_t>(width, 0));

    unsigned threads = config.thread_hint ? config.thread_hint : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

    std::atomic<std::uint64_t> next_trial{0};
    auto worker = [&] {
        std::vector<std::uint8_t> scratch;
        for (;;) {
            const std::uint64_t t = next_trial.fetch_add(1, std::memory_order_relaxed);
            if (t >= trials) break;
            std::vector<std::uint32_t>& row = agg.per_trial_exact[t];
            for (const CompiledLog& cl : logs) {
                if (cl.fixed_run >= 0) {
                    if (cl.fixed_run >= config.min_length) ++row[cl.fixed_run - config.min_length];
                    continue;
                }
                StreamRng rng(derive_trial_seed(config.master_seed, cl.player_id, cl.season, t));
                scratch = cl.hits;
                fisher_yates_shuffle(scratch, rng);
                count_runs(scratch, config.min_length, row);
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    // Reduce in trial order; identical regardless of scheduling above.
    agg.exact.resize(width);
    agg.cumulative.resize(width);
    std::vector<std::vector<std::uint32_t>> cum_rows(trials, std::vector<std::uint32_t>(width, 0));
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint32_t sum = 0;
        for (std::size_t i = width; i > 0; --i) {
            sum += agg.per_trial_exact[t][i - 1];
            cum_rows[t][i - 1] = sum;
        }
    }
    for (std::size_t i = 0; i < width; ++i) {
        const auto ex = column_mean_sd(trials, [&](std::uint64_t t) { return agg.per_trial_exact[t][i]; });
        const auto cu = column_mean_sd(trials, [&](std::uint64_t t) { return cum_rows[t][i]; });
        LengthAggregate& e = agg.exact[i];
        LengthAggregate& c = agg.cumulative[i];
        e.mean = ex.mean;
        e.sd = ex.sd;
        c.mean = cu.mean;
        c.sd = cu.sd;
        e.min = e.max = agg.per_trial_exact[0][i];
        c.min = c.max = cum_rows[0][i];
        for (std::uint64_t t = 1; t < trials; ++t) {
            e.min = std::min(e.min, agg.per_trial_exact[t][i]);
            e.max = std::max(e.max, agg.per_trial_exact[t][i]);
            c.min = std::min(c.min, cum_rows[t][i]);
            c.max = std::max(c.max, cum_rows[t][i]);
        }
    }
    return agg;
}

ConvergenceReport convergence_split(const TrialAggregate& agg) {
    const std::uint64_t trials = agg.per_trial_exact.size();
    if (trials < 2) throw DomainError("convergence split needs at least 2 trials");

    ConvergenceReport report;
    report.first_half = trials / 2;
    report.second_half = trials - report.first_half;

    const std::size_t width = agg.lengths();
    auto exact_val = [&](std::uint64_t t, std::size_t i) { return agg.per_trial_exact[t][i]; };
    auto cum_val = [&](std::uint64_t t, std::size_t i) {
        std::uint32_t sum = 0;
        for (std::size_t j = i; j < width; ++j) sum += agg.per_trial_exact[t][j];
        return sum;
    };

    auto build = [&](auto&& value, const std::vector<LengthAggregate>& full,
                     std::vector<ConvergenceRow>& rows) {
        for (std::size_t i = 0; i < width; ++i) {
            const auto first =
                column_mean_sd(report.first_half, [&](std::uint64_t t) { return value(t, i); });
            const auto second = column_mean_sd(report.second_half, [&](std::uint64_t t) {
                return value(report.first_half + t, i);
            });
            ConvergenceRow row;
            row.length = agg.min_length + static_cast<int>(i);
            row.mean_first = first.mean;
            row.mean_second = second.mean;
            row.sd_first = first.sd;
            row.sd_second = second.sd;
            row.abs_diff = std::abs(first.mean - second.mean);
            const double full_sd = full[i].sd;
            if (full_sd > 0.0)
                row.sd_norm_diff = row.abs_diff / full_sd;
            else
                row.sd_norm_diff = row.abs_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            row.converged = row.abs_diff <= 0.1 * full_sd;
            if (!row.converged) report.all_converged = false;
            rows.push_back(row);
        }
    };
    build(exact_val, agg.exact, report.exact);
    build(cum_val, agg.cumulative, report.cumulative);
    return report;
}

}  // namespace streaklab
