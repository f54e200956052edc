#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streaklab/errors.hpp"

namespace streaklab {

struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31, validated against the month
    bool ok() const;
    auto operator<=>(const Date&) const = default;
};

// One player-game batting line.
struct BattingLine {
    int game_seq = 0;  // order within the player-season, >= 1
    int ab = 0;
    int hits = 0;  // <= ab
    int sac_flies = 0;
    std::optional<bool> started;
    std::optional<bool> home;
    std::optional<Date> date;
    std::optional<std::string> opponent;

    bool hit_game() const { return hits >= 1; }
    // True when the line can extend or break a streak: at least one at-bat,
    // or a hitless sacrifice-fly game (which ends a streak despite 0 AB).
    bool streak_relevant() const { return ab >= 1 || sac_flies >= 1; }

    bool operator==(const BattingLine&) const = default;
};

// Ordered batting lines for one player-season; the unit of permutation.
struct PlayerSeasonLog {
    std::string player_id;
    int season = 0;
    std::vector<BattingLine> lines;  // game_seq strictly increasing

    bool operator==(const PlayerSeasonLog&) const = default;
};

struct SeasonKey {
    std::string player_id;
    int season = 0;
    auto operator<=>(const SeasonKey&) const = default;
};

// Immutable after construction; safe to share across threads.
struct Corpus {
    std::map<SeasonKey, PlayerSeasonLog> logs;

    std::size_t total_lines() const;
    bool operator==(const Corpus&) const = default;
};

struct SeasonStats {
    int games = 0;
    std::int64_t at_bats = 0;
    std::int64_t hits = 0;
    double avg = 0.0;  // hits / at_bats
};

// CSV schema (header required, exact names):
//   player_id,season,game_seq,ab,hits,sac_fly,started,home,date,opponent
// started is true/false; home is true/false/empty; date is YYYY-MM-DD or
// empty; opponent is a free token or empty. Trailing optional columns may be
// omitted entirely. Throws ParseError with the offending line number.
Corpus parse_gamelog_csv(std::istream& in);
Corpus load_gamelog_csv(const std::string& path);
void write_gamelog_csv(const Corpus& corpus, std::ostream& out);
std::string gamelog_csv_string(const Corpus& corpus);

// Drops lines that can neither extend nor break a streak (0-for-0 with no
// sacrifice fly). Order preserved; nullopt when nothing is left, which marks
// the log as excluded from downstream studies.
std::optional<PlayerSeasonLog> eligibility_filter(const PlayerSeasonLog& log);

// Keeps only games the player started. Throws DomainError if any line has no
// starts flag.
std::optional<PlayerSeasonLog> starts_filter(const PlayerSeasonLog& log);

// G, AB, H and AVG over the log. Throws DomainError when AB = 0 (average
// undefined).
SeasonStats season_stats(const PlayerSeasonLog& log);

// Corpus-wide ingest/filter tallies for the `validate` command.
struct ValidationSummary {
    std::size_t players = 0;
    std::size_t player_seasons = 0;
    std::size_t total_lines = 0;
    std::size_t eligible_lines = 0;
    std::size_t logs_empty_after_eligibility = 0;
    std::size_t lines_started = 0;
    std::size_t lines_with_date = 0;
    std::size_t lines_with_home = 0;
    std::size_t lines_with_opponent = 0;
    std::int64_t total_ab = 0;
    std::int64_t total_hits = 0;
};

ValidationSummary validate_corpus(const Corpus& corpus);

}  // namespace streaklab
