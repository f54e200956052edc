#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streaklab/gamelog.hpp"

namespace streaklab {

// Maximal run of consecutive hit games within one player-season, addressed by
// index range into the (filtered) log it was detected on.
struct StreakWindow {
    std::string player_id;
    int season = 0;
    std::size_t start_index = 0;  // inclusive
    std::size_t end_index = 0;    // inclusive
    int length = 0;               // end - start + 1
    double ab_per_game = 0.0;     // at-bats per game inside the window
    std::optional<int> start_month;       // from the first game's date
    std::optional<double> home_fraction;  // set when every game carries a home flag
};

// Counts of maximal streaks by exact length. Lengths below min_length are
// never recorded; cumulative(L) is the number of streaks of length >= L.
class StreakCensus {
public:
    explicit StreakCensus(int min_length = 1);

    void add(int length);  // no-op when length < min_length
    void add(int length, std::uint64_t count);
    void merge(const StreakCensus& other);

    std::uint64_t exact(int length) const;
    std::uint64_t cumulative(int length) const;
    std::uint64_t total() const;

    int min_length() const { return min_length_; }
    int max_length() const;  // largest length with a nonzero count; 0 when empty

    bool operator==(const StreakCensus&) const = default;

private:
    int min_length_ = 1;
    std::vector<std::uint64_t> counts_;  // indexed by length
};

struct AttritionRow {
    int n = 0;
    std::uint64_t reached = 0;   // streaks of length >= n
    std::uint64_t survived = 0;  // streaks of length >= n+1
    std::optional<double> rate;  // survived/reached; nullopt when reached == 0
};

using AttritionTable = std::vector<AttritionRow>;

// All maximal runs of consecutive lines with hits >= 1, in log order. Every
// line counts: a hit game extends a run, a hitless game breaks it, and the
// season boundary truncates. Expects an eligibility-filtered log.
std::vector<StreakWindow> maximal_streaks(const PlayerSeasonLog& log);

StreakCensus census(std::span<const StreakWindow> windows, int min_length);

// Survival rates from length n to n+1 over [n_min, n_max].
AttritionTable attrition(const StreakCensus& c, int n_min, int n_max);

struct WindowReport {
    StreakWindow window;
    double season_ab_per_game = 0.0;
    double rel_ab_increase = 0.0;  // (window AB/G - season AB/G) / season AB/G
};

struct WindowSummary {
    std::size_t window_count = 0;
    std::size_t windows_above_season_abg = 0;
    double frac_above_season_abg = 0.0;
    double mean_rel_ab_increase = 0.0;
    std::map<int, std::uint64_t> start_month_hist;  // month -> windows started there
    std::size_t windows_without_date = 0;
    std::uint64_t home_games = 0;          // over windows with full home flags
    std::uint64_t home_flagged_games = 0;
    std::optional<double> home_fraction;   // home_games / home_flagged_games
    std::size_t windows_without_home = 0;
    std::size_t logs_skipped_empty = 0;
};

struct WindowAnalytics {
    std::vector<WindowReport> windows;
    WindowSummary summary;
};

// Every window of length >= min_length across the corpus (eligibility filter
// applied per log), each compared against its player-season AB/G. Missing
// dates or home flags are recorded as omissions, never failures.
WindowAnalytics window_analytics(const Corpus& corpus, int min_length);

// Career-level streaks against one opponent: per player, the lines played
// vs `opponent` are concatenated across seasons in chronological order, then
// scanned for maximal streaks. Throws DomainError when any line lacks an
// opponent code.
StreakCensus opponent_streaks(const Corpus& corpus, const std::string& opponent);

// Observed (real-order) census over the whole corpus: eligibility filter
// always, starts filter when asked, maximal-streak counts merged per log.
StreakCensus corpus_census(const Corpus& corpus, int min_length, bool starts_only = false);

}  // namespace streaklab
