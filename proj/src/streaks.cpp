#include "streaklab/streaks.hpp"

#include <algorithm>

namespace streaklab {

StreakCensus::StreakCensus(int min_length) : min_length_(min_length) {
    if (min_length < 1) throw DomainError("census min_length must be >= 1");
}

void StreakCensus::add(int length) { add(length, 1); }

void StreakCensus::add(int length, std::uint64_t count) {
    if (length < min_length_ || count == 0) return;
    if (static_cast<std::size_t>(length) >= counts_.size()) counts_.resize(length + 1, 0);
    counts_[length] += count;
}

void StreakCensus::merge(const StreakCensus& other) {
    if (other.min_length_ != min_length_)
        throw CoverageError("cannot merge censuses with different min_length");
    if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
    for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::uint64_t StreakCensus::exact(int length) const {
    if (length < min_length_ || static_cast<std::size_t>(length) >= counts_.size()) return 0;
    return counts_[length];
}

std::uint64_t StreakCensus::cumulative(int length) const {
    std::uint64_t sum = 0;
    for (std::size_t i = std::max(length, min_length_); i < counts_.size(); ++i) sum += counts_[i];
    return sum;
}

std::uint64_t StreakCensus::total() const { return cumulative(min_length_); }

int StreakCensus::max_length() const {
    for (std::size_t i = counts_.size(); i > 0; --i)
        if (counts_[i - 1] > 0) return static_cast<int>(i - 1);
    return 0;
}

std::vector<StreakWindow> maximal_streaks(const PlayerSeasonLog& log) {
    std::vector<StreakWindow> windows;
    const std::size_t n = log.lines.size();
    std::size_t i = 0;
    while (i < n) {
        if (!log.lines[i].hit_game()) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::int64_t ab_sum = 0;
        bool all_home_flagged = true;
        std::int64_t home_count = 0;
        while (j < n && log.lines[j].hit_game()) {
            ab_sum += log.lines[j].ab;
            if (log.lines[j].home.has_value())
                home_count += *log.lines[j].home ? 1 : 0;
            else
                all_home_flagged = false;
            ++j;
        }
        StreakWindow w;
        w.player_id = log.player_id;
        w.season = log.season;
        w.start_index = i;
        w.end_index = j - 1;
        w.length = static_cast<int>(j - i);
        w.ab_per_game = static_cast<double>(ab_sum) / static_cast<double>(w.length);
        if (log.lines[i].date.has_value()) w.start_month = log.lines[i].date->month;
        if (all_home_flagged)
            w.home_fraction = static_cast<double>(home_count) / static_cast<double>(w.length);
        windows.push_back(std::move(w));
        i = j;
    }
    return windows;
}

StreakCensus census(std::span<const StreakWindow> windows, int min_length) {
    StreakCensus c(min_length);
    for (const StreakWindow& w : windows) c.add(w.length);
    return c;
}

AttritionTable attrition(const StreakCensus& c, int n_min, int n_max) {
    if (n_min < 1) throw DomainError("attrition n_min must be >= 1");
    if (n_max < n_min) throw DomainError("attrition n_max must be >= n_min");
    if (n_min < c.min_length())
        throw CoverageError("attrition range starts below the census min_length");
    AttritionTable table;
    table.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        AttritionRow row;
        row.n = n;
        row.reached = c.cumulative(n);
        row.survived = c.cumulative(n + 1);
        if (row.reached > 0)
            row.rate = static_cast<double>(row.survived) / static_cast<double>(row.reached);
        table.push_back(row);
    }
    return table;
}

WindowAnalytics window_analytics(const Corpus& corpus, int min_length) {
    if (min_length < 1) throw DomainError("window analytics min_length must be >= 1");
    WindowAnalytics out;
    double rel_sum = 0.0;
    for (const auto& [key, raw_log] : corpus.logs) {
        const auto log = eligibility_filter(raw_log);
        if (!log.has_value()) {
            ++out.summary.logs_skipped_empty;
            continue;
        }
        const auto windows = maximal_streaks(*log);
        bool has_long_window = false;
        for (const StreakWindow& w : windows)
            if (w.length >= min_length) has_long_window = true;
        if (!has_long_window) continue;

        // A window implies at least one hit, hence AB >= 1 for the season.
        const SeasonStats stats = season_stats(*log);
        const double season_abg = static_cast<double>(stats.at_bats) / stats.games;
        for (const StreakWindow& w : windows) {
            if (w.length < min_length) continue;
            WindowReport report;
            report.window = w;
            report.season_ab_per_game = season_abg;
            report.rel_ab_increase = (w.ab_per_game - season_abg) / season_abg;
            rel_sum += report.rel_ab_increase;
            if (w.ab_per_game > season_abg) ++out.summary.windows_above_season_abg;
            if (w.start_month.has_value())
                ++out.summary.start_month_hist[*w.start_month];
            else
                ++out.summary.windows_without_date;
            if (w.home_fraction.has_value()) {
                out.summary.home_flagged_games += w.length;
                for (std::size_t i = w.start_index; i <= w.end_index; ++i)
                    if (log->lines[i].home.value_or(false)) ++out.summary.home_games;
            } else {
                ++out.summary.windows_without_home;
            }
            out.windows.push_back(std::move(report));
        }
    }
    out.summary.window_count = out.windows.size();
    if (!out.windows.empty()) {
        out.summary.frac_above_season_abg =
            static_cast<double>(out.summary.windows_above_season_abg) / out.windows.size();
        out.summary.mean_rel_ab_increase = rel_sum / static_cast<double>(out.windows.size());
    }
    if (out.summary.home_flagged_games > 0)
        out.summary.home_fraction = static_cast<double>(out.summary.home_games) /
                                    static_cast<double>(out.summary.home_flagged_games);
    return out;
}

StreakCensus corpus_census(const Corpus& corpus, int min_length, bool starts_only) {
    StreakCensus total(min_length);
    for (const auto& [key, raw_log] : corpus.logs) {
        std::optional<PlayerSeasonLog> log =
            starts_only ? starts_filter(raw_log) : std::optional<PlayerSeasonLog>(raw_log);
        if (log.has_value()) log = eligibility_filter(*log);
        if (!log.has_value()) continue;
        int run = 0;
        for (const BattingLine& bl : log->lines) {
            if (bl.hit_game()) {
                ++run;
            } else if (run > 0) {
                total.add(run);
                run = 0;
            }
        }
        if (run > 0) total.add(run);
    }
    return total;
}

StreakCensus opponent_streaks(const Corpus& corpus, const std::string& opponent) {
    // Group each player's opponent-restricted lines across seasons. Corpus
    // iteration is (player_id, season)-ordered, so concatenation is already
    // chronological.
    std::map<std::string, std::vector<const BattingLine*>> per_player;
    for (const auto& [key, log] : corpus.logs) {
        for (const BattingLine& bl : log.lines) {
            if (!bl.opponent.has_value())
                throw DomainError("opponent codes required (" + log.player_id + "/" +
                                  std::to_string(log.season) + " game " +
                                  std::to_string(bl.game_seq) + ")");
            if (!bl.streak_relevant()) continue;
            if (*bl.opponent == opponent) per_player[log.player_id].push_back(&bl);
        }
    }
    StreakCensus c(1);
    for (const auto& [player, lines] : per_player) {
        int run = 0;
        for (const BattingLine* bl : lines) {
            if (bl->hit_game()) {
                ++run;
            } else if (run > 0) {
                c.add(run);
                run = 0;
            }
        }
        if (run > 0) c.add(run);
    }
    return c;
}

}  // namespace streaklab
