#include "streaklab/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace streaklab {

namespace {

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_sci(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4Le", v);
    return buf;
}

json length_aggregate_json(int length, const LengthAggregate& a) {
    return {{"length", length}, {"mean", a.mean}, {"sd", a.sd}, {"min", a.min}, {"max", a.max}};
}

json convergence_rows_json(const std::vector<ConvergenceRow>& rows) {
    json arr = json::array();
    for (const ConvergenceRow& r : rows) {
        arr.push_back({{"length", r.length},
                       {"mean_first", r.mean_first},
                       {"mean_second", r.mean_second},
                       {"sd_first", r.sd_first},
                       {"sd_second", r.sd_second},
                       {"abs_diff", r.abs_diff},
                       {"sd_norm_diff", std::isfinite(r.sd_norm_diff) ? json(r.sd_norm_diff) : json()},
                       {"converged", r.converged}});
    }
    return arr;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line_no, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string(what) + " is not a non-negative integer: '" +
                                      std::string(tok) + "'");
    return v;
}

}  // namespace

std::string census_csv(const StreakCensus& c, bool cumulative) {
    std::ostringstream os;
    os << (cumulative ? "length,count_ge\n" : "length,count\n");
    const int top = std::max(c.max_length(), c.min_length());
    for (int len = c.min_length(); len <= top; ++len)
        os << len << ',' << (cumulative ? c.cumulative(len) : c.exact(len)) << '\n';
    return os.str();
}

json census_json(const StreakCensus& c) {
    json exact = json::array();
    json cumulative = json::array();
    const int top = std::max(c.max_length(), c.min_length());
    for (int len = c.min_length(); len <= top; ++len) {
        exact.push_back({{"length", len}, {"count", c.exact(len)}});
        cumulative.push_back({{"length", len}, {"count_ge", c.cumulative(len)}});
    }
    return {{"min_length", c.min_length()},
            {"max_length", c.max_length()},
            {"total", c.total()},
            {"exact", exact},
            {"cumulative", cumulative}};
}

StreakCensus census_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty census file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "length,count_ge")
        throw Error("census file holds cumulative counts; an exact `length,count` census is required");
    if (line != "length,count") throw ParseError(1, "bad census header, expected 'length,count'");

    struct Row {
        int length;
        std::uint64_t count;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(line_no, "expected 'length,count'");
        const auto len = parse_u64(std::string_view(line).substr(0, comma), line_no, "length");
        const auto count = parse_u64(std::string_view(line).substr(comma + 1), line_no, "count");
        if (len < 1) throw ParseError(line_no, "length must be >= 1");
        rows.push_back({static_cast<int>(len), count});
    }
    if (rows.empty()) throw Error("census file has no rows");
    int min_length = rows.front().length;
    for (const Row& r : rows) min_length = std::min(min_length, r.length);
    StreakCensus c(min_length);
    for (const Row& r : rows) c.add(r.length, r.count);
    return c;
}

StreakCensus load_census_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open census file: " + path);
    return census_from_csv(in);
}

std::string attrition_csv(const AttritionTable& table) {
    std::ostringstream os;
    os << "n,reached,survived,rate\n";
    for (const AttritionRow& row : table) {
        os << row.n << ',' << row.reached << ',' << row.survived << ',';
        if (row.rate.has_value()) os << fmt(*row.rate, "%.3f");
        os << '\n';
    }
    return os.str();
}

json attrition_json(const AttritionTable& table) {
    json arr = json::array();
    for (const AttritionRow& row : table)
        arr.push_back({{"n", row.n},
                       {"reached", row.reached},
                       {"survived", row.survived},
                       {"rate", row.rate.has_value() ? json(*row.rate) : json()}});
    return {{"rows", arr}};
}

json convergence_json(const ConvergenceReport& report) {
    return {{"first_half", report.first_half},
            {"second_half", report.second_half},
            {"exact", convergence_rows_json(report.exact)},
            {"cumulative", convergence_rows_json(report.cumulative)},
            {"all_converged", report.all_converged}};
}

json aggregate_json(const TrialAggregate& agg, bool include_trials) {
    // The thread hint is deliberately not echoed: it cannot change the
    // result, and the same study must serialize to the same bytes whatever
    // the machine ran it with.
    json config = {{"trials", agg.config.trials},
                   {"seed", agg.config.master_seed},
                   {"starts_only", agg.config.starts_only},
                   {"min_length", agg.config.min_length}};
    json lengths = json::array();
    json cumulative = json::array();
    for (std::size_t i = 0; i < agg.lengths(); ++i) {
        const int len = agg.min_length + static_cast<int>(i);
        lengths.push_back(length_aggregate_json(len, agg.exact[i]));
        cumulative.push_back(length_aggregate_json(len, agg.cumulative[i]));
    }
    json doc = {{"config", config},
                {"min_length", agg.min_length},
                {"max_length", agg.max_length},
                {"logs_used", agg.logs_used},
                {"logs_skipped_empty", agg.logs_skipped_empty},
                {"lengths", lengths},
                {"cumulative", cumulative}};
    doc["convergence"] =
        agg.per_trial_exact.size() >= 2 ? convergence_json(convergence_split(agg)) : json();
    if (include_trials) doc["per_trial_exact"] = agg.per_trial_exact;
    return doc;
}

TrialAggregate aggregate_from_json(const json& doc) {
    TrialAggregate agg;
    try {
        agg.min_length = doc.at("min_length").get<int>();
        agg.max_length = doc.at("max_length").get<int>();
        agg.logs_used = doc.at("logs_used").get<std::size_t>();
        agg.logs_skipped_empty = doc.at("logs_skipped_empty").get<std::size_t>();
        const json& config = doc.at("config");
        agg.config.trials = config.at("trials").get<std::uint64_t>();
        agg.config.master_seed = config.at("seed").get<std::uint64_t>();
        agg.config.starts_only = config.at("starts_only").get<bool>();
        agg.config.min_length = config.at("min_length").get<int>();
        auto read_rows = [&](const char* key, std::vector<LengthAggregate>& out) {
            for (const json& row : doc.at(key)) {
                LengthAggregate a;
                a.mean = row.at("mean").get<double>();
                a.sd = row.at("sd").get<double>();
                a.min = row.at("min").get<std::uint32_t>();
                a.max = row.at("max").get<std::uint32_t>();
                out.push_back(a);
            }
        };
        read_rows("lengths", agg.exact);
        read_rows("cumulative", agg.cumulative);
        if (doc.contains("per_trial_exact"))
            agg.per_trial_exact = doc.at("per_trial_exact").get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed study JSON: ") + e.what());
    }
    if (agg.exact.size() != agg.cumulative.size() ||
        agg.exact.size() !=
            static_cast<std::size_t>(agg.max_length - agg.min_length + 1))
        throw Error("malformed study JSON: length tables do not match the declared range");
    return agg;
}

TrialAggregate load_study_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open study file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("cannot parse study JSON " + path + ": " + e.what());
    }
    return aggregate_from_json(doc);
}

std::string windows_csv(const WindowAnalytics& analytics) {
    std::ostringstream os;
    os << "player_id,season,start_index,end_index,length,ab_per_game,season_ab_per_game,"
          "rel_ab_increase,start_month,home_fraction\n";
    for (const WindowReport& r : analytics.windows) {
        const StreakWindow& w = r.window;
        os << w.player_id << ',' << w.season << ',' << w.start_index << ',' << w.end_index << ','
           << w.length << ',' << fmt(w.ab_per_game, "%.6g") << ','
           << fmt(r.season_ab_per_game, "%.6g") << ',' << fmt(r.rel_ab_increase, "%.6g") << ',';
        if (w.start_month.has_value()) os << *w.start_month;
        os << ',';
        if (w.home_fraction.has_value()) os << fmt(*w.home_fraction, "%.6g");
        os << '\n';
    }
    return os.str();
}

json window_summary_json(const WindowSummary& s) {
    json hist = json::object();
    for (const auto& [month, count] : s.start_month_hist) hist[std::to_string(month)] = count;
    return {{"window_count", s.window_count},
            {"windows_above_season_abg", s.windows_above_season_abg},
            {"frac_above_season_abg", s.frac_above_season_abg},
            {"mean_rel_ab_increase", s.mean_rel_ab_increase},
            {"start_month_hist", hist},
            {"windows_without_date", s.windows_without_date},
            {"home_games", s.home_games},
            {"home_flagged_games", s.home_flagged_games},
            {"home_fraction", s.home_fraction.has_value() ? json(*s.home_fraction) : json()},
            {"windows_without_home", s.windows_without_home},
            {"logs_skipped_empty", s.logs_skipped_empty}};
}

json window_analytics_json(const WindowAnalytics& analytics) {
    json rows = json::array();
    for (const WindowReport& r : analytics.windows) {
        const StreakWindow& w = r.window;
        rows.push_back(
            {{"player_id", w.player_id},
             {"season", w.season},
             {"start_index", w.start_index},
             {"end_index", w.end_index},
             {"length", w.length},
             {"ab_per_game", w.ab_per_game},
             {"season_ab_per_game", r.season_ab_per_game},
             {"rel_ab_increase", r.rel_ab_increase},
             {"start_month", w.start_month.has_value() ? json(*w.start_month) : json()},
             {"home_fraction", w.home_fraction.has_value() ? json(*w.home_fraction) : json()}});
    }
    return {{"windows", rows}, {"summary", window_summary_json(analytics.summary)}};
}

std::string comparison_csv(std::span<const ComparisonRow> rows,
                           std::span<const std::optional<EmpiricalTail>> empiricals) {
    const bool with_empirical = !empiricals.empty();
    std::ostringstream os;
    os << "label,observed,null_mean,null_sd,z,p_upper,p_upper_log10,excess_ratio";
    if (with_empirical) os << ",empirical_p";
    os << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ComparisonRow& r = rows[i];
        os << r.label << ',' << r.observed << ',' << fmt(r.null_mean) << ',' << fmt(r.null_sd) << ',';
        if (!r.degenerate)
            os << fmt(r.z, "%.4f") << ',' << fmt_sci(r.p_upper) << ',' << fmt(r.p_upper_log10, "%.4f");
        else
            os << ",,";
        os << ',';
        if (std::isfinite(r.excess_ratio)) os << fmt(r.excess_ratio, "%.6g");
        if (with_empirical) {
            os << ',';
            if (i < empiricals.size() && empiricals[i].has_value()) {
                const EmpiricalTail& e = *empiricals[i];
                if (e.saturated) os << '<';
                os << fmt(e.p, "%.6g");
            }
        }
        os << '\n';
    }
    return os.str();
}

json comparison_json(std::span<const ComparisonRow> rows,
                     std::span<const std::optional<EmpiricalTail>> empiricals) {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ComparisonRow& r = rows[i];
        json row = {{"label", r.label},
                    {"observed", r.observed},
                    {"null_mean", r.null_mean},
                    {"null_sd", r.null_sd},
                    {"degenerate", r.degenerate}};
        if (!r.degenerate) {
            row["z"] = r.z;
            row["p_upper"] = static_cast<double>(r.p_upper);
            row["p_upper_sci"] = fmt_sci(r.p_upper);
            row["p_upper_log10"] = r.p_upper_log10;
        } else {
            row["z"] = nullptr;
            row["p_upper"] = nullptr;
            row["p_upper_sci"] = nullptr;
            row["p_upper_log10"] = nullptr;
        }
        row["excess_ratio"] = std::isfinite(r.excess_ratio) ? json(r.excess_ratio) : json();
        if (i < empiricals.size() && empiricals[i].has_value()) {
            const EmpiricalTail& e = *empiricals[i];
            row["empirical_p"] = e.p;
            row["empirical_saturated"] = e.saturated;
            row["empirical_ge_count"] = e.ge_count;
        }
        arr.push_back(row);
    }
    return {{"rows", arr}};
}

std::string validation_text(const ValidationSummary& v) {
    std::ostringstream os;
    os << "players=" << v.players << '\n'
       << "player_seasons=" << v.player_seasons << '\n'
       << "total_lines=" << v.total_lines << '\n'
       << "eligible_lines=" << v.eligible_lines << '\n'
       << "logs_empty_after_eligibility=" << v.logs_empty_after_eligibility << '\n'
       << "lines_started=" << v.lines_started << '\n'
       << "lines_with_date=" << v.lines_with_date << '\n'
       << "lines_with_home=" << v.lines_with_home << '\n'
       << "lines_with_opponent=" << v.lines_with_opponent << '\n'
       << "total_ab=" << v.total_ab << '\n'
       << "total_hits=" << v.total_hits << '\n';
    if (v.total_ab > 0)
        os << "corpus_avg=" << fmt(static_cast<double>(v.total_hits) / static_cast<double>(v.total_ab), "%.4f")
           << '\n';
    return os.str();
}

json validation_json(const ValidationSummary& v) {
    json doc = {{"players", v.players},
                {"player_seasons", v.player_seasons},
                {"total_lines", v.total_lines},
                {"eligible_lines", v.eligible_lines},
                {"logs_empty_after_eligibility", v.logs_empty_after_eligibility},
                {"lines_started", v.lines_started},
                {"lines_with_date", v.lines_with_date},
                {"lines_with_home", v.lines_with_home},
                {"lines_with_opponent", v.lines_with_opponent},
                {"total_ab", v.total_ab},
                {"total_hits", v.total_hits}};
    doc["corpus_avg"] = v.total_ab > 0
                            ? json(static_cast<double>(v.total_hits) / static_cast<double>(v.total_ab))
                            : json();
    return doc;
}

}  // namespace streaklab
