#include "streaklab/gamelog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

namespace streaklab {

namespace {

constexpr std::string_view kHeader =
    "player_id,season,game_seq,ab,hits,sac_fly,started,home,date,opponent";

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(std::string_view tok, std::size_t line_no, const char* what, int min_value) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string(what) + " is not an integer: '" + std::string(tok) + "'");
    if (value < min_value)
        throw ParseError(line_no, std::string(what) + " must be >= " + std::to_string(min_value));
    return value;
}

bool parse_bool(std::string_view tok, std::size_t line_no, const char* what) {
    if (tok == "true") return true;
    if (tok == "false") return false;
    throw ParseError(line_no, std::string(what) + " must be true or false, got '" + std::string(tok) + "'");
}

Date parse_date(std::string_view tok, std::size_t line_no) {
    Date d;
    if (tok.size() != 10 || tok[4] != '-' || tok[7] != '-')
        throw ParseError(line_no, "date must be YYYY-MM-DD, got '" + std::string(tok) + "'");
    auto num = [&](std::size_t off, std::size_t len, int& out) {
        const auto [ptr, ec] = std::from_chars(tok.data() + off, tok.data() + off + len, out);
        return ec == std::errc{} && ptr == tok.data() + off + len;
    };
    if (!num(0, 4, d.year) || !num(5, 2, d.month) || !num(8, 2, d.day) || !d.ok())
        throw ParseError(line_no, "invalid calendar date '" + std::string(tok) + "'");
    return d;
}

}  // namespace

bool Date::ok() const {
    if (month < 1 || month > 12 || day < 1) return false;
    static constexpr int days_in[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int limit = days_in[month - 1];
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) limit = 29;
    return day <= limit;
}

std::size_t Corpus::total_lines() const {
    std::size_t n = 0;
    for (const auto& [key, log] : logs) n += log.lines.size();
    return n;
}

Corpus parse_gamelog_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty input: no game-log rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        throw ParseError(1, "bad header, expected '" + std::string(kHeader) + "'");

    Corpus corpus;
    std::map<SeasonKey, std::set<int>> seen_seqs;
    std::size_t line_no = 1;
    std::size_t rows = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_fields(line);
        // The last three columns are optional and may be left off entirely.
        if (fields.size() < 7 || fields.size() > 10)
            throw ParseError(line_no, "expected 7..10 columns, got " + std::to_string(fields.size()));

        BattingLine bl;
        const std::string player_id{fields[0]};
        if (player_id.empty()) throw ParseError(line_no, "player_id is empty");
        const int season = parse_int(fields[1], line_no, "season", 0);
        bl.game_seq = parse_int(fields[2], line_no, "game_seq", 1);
        bl.ab = parse_int(fields[3], line_no, "ab", 0);
        bl.hits = parse_int(fields[4], line_no, "hits", 0);
        bl.sac_flies = parse_int(fields[5], line_no, "sac_fly", 0);
        if (bl.hits > bl.ab) throw ParseError(line_no, "hits exceed at-bats");
        bl.started = parse_bool(fields[6], line_no, "started");
        if (fields.size() > 7 && !fields[7].empty())
            bl.home = parse_bool(fields[7], line_no, "home");
        if (fields.size() > 8 && !fields[8].empty())
            bl.date = parse_date(fields[8], line_no);
        if (fields.size() > 9 && !fields[9].empty())
            bl.opponent = std::string(fields[9]);

        const SeasonKey key{player_id, season};
        if (!seen_seqs[key].insert(bl.game_seq).second)
            throw ParseError(line_no, "duplicate game_seq " + std::to_string(bl.game_seq) + " for " +
                                          player_id + "/" + std::to_string(season));
        auto& log = corpus.logs[key];
        if (log.lines.empty()) {
            log.player_id = player_id;
            log.season = season;
        }
        log.lines.push_back(bl);
        ++rows;
    }
    if (rows == 0) throw Error("empty input: no game-log rows");

    for (auto& [key, log] : corpus.logs)
        std::sort(log.lines.begin(), log.lines.end(),
                  [](const BattingLine& a, const BattingLine& b) { return a.game_seq < b.game_seq; });
    return corpus;
}

Corpus load_gamelog_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open game-log file: " + path);
    return parse_gamelog_csv(in);
}

void write_gamelog_csv(const Corpus& corpus, std::ostream& out) {
    out << kHeader << '\n';
    for (const auto& [key, log] : corpus.logs) {
        for (const BattingLine& bl : log.lines) {
            out << log.player_id << ',' << log.season << ',' << bl.game_seq << ',' << bl.ab << ','
                << bl.hits << ',' << bl.sac_flies << ',';
            if (bl.started.has_value())
                out << (*bl.started ? "true" : "false");
            out << ',';
            if (bl.home.has_value()) out << (*bl.home ? "true" : "false");
            out << ',';
            if (bl.date.has_value()) {
                char buf[16];
                std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", bl.date->year, bl.date->month,
                              bl.date->day);
                out << buf;
            }
            out << ',';
            if (bl.opponent.has_value()) out << *bl.opponent;
            out << '\n';
        }
    }
}

std::string gamelog_csv_string(const Corpus& corpus) {
    std::ostringstream os;
    write_gamelog_csv(corpus, os);
    return os.str();
}

std::optional<PlayerSeasonLog> eligibility_filter(const PlayerSeasonLog& log) {
    PlayerSeasonLog out;
    out.player_id = log.player_id;
    out.season = log.season;
    for (const BattingLine& bl : log.lines)
        if (bl.streak_relevant()) out.lines.push_back(bl);
    if (out.lines.empty()) return std::nullopt;
    return out;
}

std::optional<PlayerSeasonLog> starts_filter(const PlayerSeasonLog& log) {
    PlayerSeasonLog out;
    out.player_id = log.player_id;
    out.season = log.season;
    for (const BattingLine& bl : log.lines) {
        if (!bl.started.has_value())
            throw DomainError("starts flag required for starts-only mode (" + log.player_id + "/" +
                              std::to_string(log.season) + " game " + std::to_string(bl.game_seq) + ")");
        if (*bl.started) out.lines.push_back(bl);
    }
    if (out.lines.empty()) return std::nullopt;
    return out;
}

SeasonStats season_stats(const PlayerSeasonLog& log) {
    SeasonStats s;
    s.games = static_cast<int>(log.lines.size());
    for (const BattingLine& bl : log.lines) {
        s.at_bats += bl.ab;
        s.hits += bl.hits;
    }
    if (s.at_bats == 0)
        throw DomainError("season batting average undefined: zero at-bats (" + log.player_id + "/" +
                          std::to_string(log.season) + ")");
    s.avg = static_cast<double>(s.hits) / static_cast<double>(s.at_bats);
    return s;
}

ValidationSummary validate_corpus(const Corpus& corpus) {
    ValidationSummary v;
    std::set<std::string> players;
    for (const auto& [key, log] : corpus.logs) {
        players.insert(log.player_id);
        ++v.player_seasons;
        std::size_t eligible = 0;
        for (const BattingLine& bl : log.lines) {
            ++v.total_lines;
            if (bl.streak_relevant()) {
                ++eligible;
                ++v.eligible_lines;
            }
            if (bl.started.value_or(false)) ++v.lines_started;
            if (bl.date.has_value()) ++v.lines_with_date;
            if (bl.home.has_value()) ++v.lines_with_home;
            if (bl.opponent.has_value()) ++v.lines_with_opponent;
            v.total_ab += bl.ab;
            v.total_hits += bl.hits;
        }
        if (eligible == 0) ++v.logs_empty_after_eligibility;
    }
    v.players = players.size();
    return v;
}

}  // namespace streaklab
