#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "streaklab/gamelog.hpp"
#include "streaklab/permute.hpp"
#include "streaklab/report_io.hpp"
#include "streaklab/stats.hpp"
#include "streaklab/streaks.hpp"
#include "streaklab/synth.hpp"
#include "streaklab/theory.hpp"

namespace {

using streaklab::json;

// Data goes to stdout (or --out); diagnostics go to stderr.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw streaklab::Error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(json doc, json config, const std::string& out_path) {
    doc["config"] = std::move(config);
    emit(doc.dump(2), out_path);
}

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

streaklab::AbWeights parse_weights(const std::vector<double>& values, const char* what) {
    if (values.size() != streaklab::kMaxAbPerGame + 1)
        throw streaklab::ConfigError(std::string(what) + " needs exactly " +
                                     std::to_string(streaklab::kMaxAbPerGame + 1) + " weights");
    streaklab::AbWeights w{};
    for (std::size_t i = 0; i < values.size(); ++i) w[i] = values[i];
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hitting-streak analytics: streak censuses, permutation null studies, and the\n"
                 "coin-flip model, over per-game batting logs."};
    app.require_subcommand(1);

    // ---- validate ----
    struct {
        std::string input, out;
        bool as_json = false;
    } validate_args;
    auto* cmd_validate = app.add_subcommand("validate", "Parse a game-log CSV and print ingest counts");
    cmd_validate->add_option("input", validate_args.input, "game-log CSV")->required();
    cmd_validate->add_flag("--json", validate_args.as_json, "JSON output");
    cmd_validate->add_option("--out", validate_args.out, "write to file instead of stdout");
    cmd_validate->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(validate_args.input);
        const auto summary = streaklab::validate_corpus(corpus);
        if (validate_args.as_json)
            emit_json(streaklab::validation_json(summary),
                      {{"command", "validate"}, {"input", validate_args.input}}, validate_args.out);
        else
            emit(streaklab::validation_text(summary), validate_args.out);
    });

    // ---- count ----
    struct {
        std::string input, out;
        int min_length = 1;
        bool starts_only = false, cumulative = false, as_json = false;
    } count_args;
    auto* cmd_count = app.add_subcommand("count", "Observed (real-order) streak census");
    cmd_count->add_option("input", count_args.input, "game-log CSV")->required();
    cmd_count->add_option("--min-length", count_args.min_length, "smallest streak length to record")
        ->check(CLI::PositiveNumber);
    cmd_count->add_flag("--starts-only", count_args.starts_only, "drop games the player did not start");
    cmd_count->add_flag("--cumulative", count_args.cumulative, "emit counts of length >= L");
    cmd_count->add_flag("--json", count_args.as_json, "JSON output");
    cmd_count->add_option("--out", count_args.out, "write to file instead of stdout");
    cmd_count->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(count_args.input);
        const auto c = streaklab::corpus_census(corpus, count_args.min_length, count_args.starts_only);
        if (count_args.as_json)
            emit_json(streaklab::census_json(c),
                      {{"command", "count"},
                       {"input", count_args.input},
                       {"min_length", count_args.min_length},
                       {"starts_only", count_args.starts_only}},
                      count_args.out);
        else
            emit(streaklab::census_csv(c, count_args.cumulative), count_args.out);
    });

    // ---- permute ----
    struct {
        std::string input, out;
        std::uint64_t trials = 0, seed = 0;
        int min_length = 1;
        unsigned threads = 0;
        bool starts_only = false, keep_trials = false;
    } permute_args;
    auto* cmd_permute = app.add_subcommand("permute", "Monte Carlo permutation study of streak counts");
    cmd_permute->add_option("input", permute_args.input, "game-log CSV")->required();
    cmd_permute->add_option("--trials", permute_args.trials, "number of random sortings")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_permute->add_option("--seed", permute_args.seed, "master seed (required: runs must be reproducible)")
        ->required();
    cmd_permute->add_flag("--starts-only", permute_args.starts_only,
                          "drop games the player did not start");
    cmd_permute->add_option("--min-length", permute_args.min_length, "smallest streak length to tally")
        ->check(CLI::PositiveNumber);
    cmd_permute->add_option("--threads", permute_args.threads,
                            "worker threads (hint; result is thread-count-invariant)");
    cmd_permute->add_flag("--keep-trials", permute_args.keep_trials,
                          "embed the raw per-trial totals in the JSON");
    cmd_permute->add_option("--out", permute_args.out, "write to file instead of stdout");
    cmd_permute->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(permute_args.input);
        streaklab::StudyConfig config;
        config.trials = permute_args.trials;
        config.master_seed = permute_args.seed;
        config.starts_only = permute_args.starts_only;
        config.min_length = permute_args.min_length;
        config.thread_hint = permute_args.threads;
        const auto agg = streaklab::run_study(corpus, config);
        json doc = streaklab::aggregate_json(agg, permute_args.keep_trials);
        doc["config"]["command"] = "permute";
        doc["config"]["input"] = permute_args.input;
        emit(doc.dump(2), permute_args.out);
    });

    // ---- theory ----
    auto* cmd_theory = app.add_subcommand("theory", "Coin-flip (independence) model calculations");
    cmd_theory->require_subcommand(1);

    struct {
        double avg = 0.0, abg = 0.0;
        bool as_json = false;
        std::string out;
    } prob_args;
    auto* cmd_prob = cmd_theory->add_subcommand("prob", "per-game probability of at least one hit");
    cmd_prob->add_option("--avg", prob_args.avg, "batting average")->required();
    cmd_prob->add_option("--abg", prob_args.abg, "at-bats per game")->required();
    cmd_prob->add_flag("--json", prob_args.as_json, "JSON output");
    cmd_prob->add_option("--out", prob_args.out, "write to file instead of stdout");
    cmd_prob->callback([&] {
        const double p = streaklab::per_game_hit_prob(prob_args.avg, prob_args.abg);
        if (prob_args.as_json)
            emit_json({{"prob", p}},
                      {{"command", "theory prob"}, {"avg", prob_args.avg}, {"abg", prob_args.abg}},
                      prob_args.out);
        else
            emit(fmt10(p), prob_args.out);
    });

    struct {
        double avg = 0.0, abg = 0.0;
        int games = 0;
        bool as_json = false;
        std::string out;
    } eg_args;
    auto* cmd_eg = cmd_theory->add_subcommand("expected-games", "expected number of hit games");
    cmd_eg->add_option("--avg", eg_args.avg, "batting average")->required();
    cmd_eg->add_option("--abg", eg_args.abg, "at-bats per game")->required();
    cmd_eg->add_option("--games", eg_args.games, "games in the season")->required();
    cmd_eg->add_flag("--json", eg_args.as_json, "JSON output");
    cmd_eg->add_option("--out", eg_args.out, "write to file instead of stdout");
    cmd_eg->callback([&] {
        const double e = streaklab::expected_hit_games(eg_args.avg, eg_args.abg, eg_args.games);
        if (eg_args.as_json)
            emit_json({{"expected_hit_games", e}},
                      {{"command", "theory expected-games"},
                       {"avg", eg_args.avg},
                       {"abg", eg_args.abg},
                       {"games", eg_args.games}},
                      eg_args.out);
        else
            emit(fmt10(e), eg_args.out);
    });

    struct {
        int len = 0, games = 0;
        double avg = -1.0, abg = 0.0;
        std::vector<double> probs;
        bool as_json = false;
        std::string out;
    } streak_args;
    auto* cmd_streak =
        cmd_theory->add_subcommand("streak", "probability of a hitting streak of a given length");
    cmd_streak->add_option("--len", streak_args.len, "streak length")->required()
        ->check(CLI::PositiveNumber);
    auto* streak_avg = cmd_streak->add_option("--avg", streak_args.avg, "batting average");
    auto* streak_abg = cmd_streak->add_option("--abg", streak_args.abg, "at-bats per game");
    auto* streak_games = cmd_streak->add_option("--games", streak_args.games, "games in the season");
    auto* streak_probs = cmd_streak
                             ->add_option("--probs", streak_args.probs,
                                          "explicit per-game hit probabilities (comma separated)")
                             ->delimiter(',');
    streak_probs->excludes(streak_avg)->excludes(streak_abg)->excludes(streak_games);
    cmd_streak->add_flag("--json", streak_args.as_json, "JSON output");
    cmd_streak->add_option("--out", streak_args.out, "write to file instead of stdout");
    cmd_streak->callback([&] {
        double p = 0.0;
        json config = {{"command", "theory streak"}, {"len", streak_args.len}};
        if (!streak_args.probs.empty()) {
            p = streaklab::longest_run_prob(streak_args.probs, streak_args.len);
            config["probs"] = streak_args.probs;
        } else {
            if (streak_avg->count() == 0 || streak_abg->count() == 0 || streak_games->count() == 0)
                throw CLI::RequiredError("--avg, --abg and --games (or --probs)");
            const double per_game = streaklab::per_game_hit_prob(streak_args.avg, streak_args.abg);
            p = streaklab::longest_run_prob(per_game, streak_args.games, streak_args.len);
            config["avg"] = streak_args.avg;
            config["abg"] = streak_args.abg;
            config["games"] = streak_args.games;
            config["per_game_prob"] = per_game;
        }
        if (streak_args.as_json)
            emit_json({{"prob", p}}, config, streak_args.out);
        else
            emit(fmt10(p), streak_args.out);
    });

    struct {
        std::string input, player, out;
        int k = 0, season = 0;
        bool as_json = false;
    } khit_args;
    auto* cmd_khit =
        cmd_theory->add_subcommand("khit", "expected vs observed games with exactly k hits");
    cmd_khit->add_option("input", khit_args.input, "game-log CSV")->required();
    cmd_khit->add_option("--k", khit_args.k, "hits per game")->required()
        ->check(CLI::NonNegativeNumber);
    auto* khit_player = cmd_khit->add_option("--player", khit_args.player, "restrict to one player");
    auto* khit_season = cmd_khit->add_option("--season", khit_args.season, "restrict to one season");
    khit_player->needs(khit_season);
    khit_season->needs(khit_player);
    cmd_khit->add_flag("--json", khit_args.as_json, "JSON output");
    cmd_khit->add_option("--out", khit_args.out, "write to file instead of stdout");
    cmd_khit->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(khit_args.input);
        double expected = 0.0;
        std::uint64_t observed = 0;
        bool any = false;
        for (const auto& [key, raw_log] : corpus.logs) {
            if (khit_player->count() &&
                (key.player_id != khit_args.player || key.season != khit_args.season))
                continue;
            const auto log = streaklab::eligibility_filter(raw_log);
            if (!log.has_value()) continue;
            const auto r = streaklab::expected_k_hit_games(*log, khit_args.k);
            expected += r.expected;
            observed += r.observed;
            any = true;
        }
        if (!any) throw streaklab::Error("no eligible lines matched the selection");
        json config = {{"command", "theory khit"}, {"input", khit_args.input}, {"k", khit_args.k}};
        if (khit_player->count()) {
            config["player"] = khit_args.player;
            config["season"] = khit_args.season;
        }
        if (khit_args.as_json) {
            json doc = {{"k", khit_args.k}, {"expected", expected}, {"observed", observed}};
            doc["excess_ratio"] =
                expected > 0.0 ? json(static_cast<double>(observed) / expected - 1.0) : json();
            emit_json(doc, config, khit_args.out);
        } else {
            std::string text = "k,expected,observed,excess_ratio\n";
            text += std::to_string(khit_args.k) + "," + fmt10(expected) + "," +
                    std::to_string(observed) + ",";
            if (expected > 0.0) text += fmt10(static_cast<double>(observed) / expected - 1.0);
            emit(text, khit_args.out);
        }
    });

    struct {
        double avg = 0.0, abg_base = 0.0, abg_boosted = 0.0;
        int games = 0;
        std::vector<int> lens;
        bool as_json = false;
        std::string out;
    } scen_args;
    auto* cmd_scen = cmd_theory->add_subcommand(
        "scenario", "streak-odds sensitivity to a season-long AB/G change");
    cmd_scen->add_option("--avg", scen_args.avg, "batting average")->required();
    cmd_scen->add_option("--games", scen_args.games, "games in the season")->required();
    cmd_scen->add_option("--abg-base", scen_args.abg_base, "baseline at-bats per game")->required();
    cmd_scen->add_option("--abg-boosted", scen_args.abg_boosted, "boosted at-bats per game")
        ->required();
    cmd_scen->add_option("--lens", scen_args.lens, "streak lengths (comma separated)")
        ->delimiter(',')
        ->required();
    cmd_scen->add_flag("--json", scen_args.as_json, "JSON output");
    cmd_scen->add_option("--out", scen_args.out, "write to file instead of stdout");
    cmd_scen->callback([&] {
        const auto rows = streaklab::scenario_compare(scen_args.avg, scen_args.games,
                                                      scen_args.abg_base, scen_args.abg_boosted,
                                                      scen_args.lens);
        json config = {{"command", "theory scenario"}, {"avg", scen_args.avg},
                       {"games", scen_args.games},   {"abg_base", scen_args.abg_base},
                       {"abg_boosted", scen_args.abg_boosted}, {"lens", scen_args.lens}};
        if (scen_args.as_json) {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"streak_len", r.streak_len},
                               {"prob_base", r.prob_base},
                               {"prob_boosted", r.prob_boosted},
                               {"relative_increase", r.relative_increase}});
            emit_json({{"rows", arr}}, config, scen_args.out);
        } else {
            std::string text = "length,prob_base,prob_boosted,relative_increase\n";
            for (const auto& r : rows)
                text += std::to_string(r.streak_len) + "," + fmt10(r.prob_base) + "," +
                        fmt10(r.prob_boosted) + "," + fmt10(r.relative_increase) + "\n";
            emit(text, scen_args.out);
        }
    });

    // ---- attrition ----
    struct {
        std::string input, out;
        int n_min = 1, n_max = 0;
        bool starts_only = false, as_json = false;
    } attr_args;
    auto* cmd_attr = app.add_subcommand("attrition", "streak survival rates from length n to n+1");
    cmd_attr->add_option("input", attr_args.input, "game-log CSV")->required();
    cmd_attr->add_option("--n-min", attr_args.n_min, "first length")->check(CLI::PositiveNumber);
    auto* attr_max = cmd_attr->add_option("--n-max", attr_args.n_max, "last length");
    cmd_attr->add_flag("--starts-only", attr_args.starts_only,
                       "drop games the player did not start");
    cmd_attr->add_flag("--json", attr_args.as_json, "JSON output");
    cmd_attr->add_option("--out", attr_args.out, "write to file instead of stdout");
    cmd_attr->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(attr_args.input);
        const auto c = streaklab::corpus_census(corpus, 1, attr_args.starts_only);
        if (c.max_length() == 0) throw streaklab::Error("no streaks in the corpus");
        const int n_max = attr_max->count() ? attr_args.n_max : c.max_length();
        const auto table = streaklab::attrition(c, attr_args.n_min, n_max);
        if (attr_args.as_json)
            emit_json(streaklab::attrition_json(table),
                      {{"command", "attrition"},
                       {"input", attr_args.input},
                       {"n_min", attr_args.n_min},
                       {"n_max", n_max},
                       {"starts_only", attr_args.starts_only}},
                      attr_args.out);
        else
            emit(streaklab::attrition_csv(table), attr_args.out);
    });

    // ---- windows ----
    struct {
        std::string input, out;
        int min_length = 1;
        bool as_json = false, summary_only = false;
    } win_args;
    auto* cmd_win = app.add_subcommand("windows", "in-streak analytics: AB/G, start month, home share");
    cmd_win->add_option("input", win_args.input, "game-log CSV")->required();
    cmd_win->add_option("--min-length", win_args.min_length, "smallest window to report")
        ->check(CLI::PositiveNumber);
    cmd_win->add_flag("--json", win_args.as_json, "JSON output (windows + summary)");
    cmd_win->add_flag("--summary-only", win_args.summary_only, "JSON summary without the window rows");
    cmd_win->add_option("--out", win_args.out, "write to file instead of stdout");
    cmd_win->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(win_args.input);
        const auto analytics = streaklab::window_analytics(corpus, win_args.min_length);
        const json config = {{"command", "windows"},
                             {"input", win_args.input},
                             {"min_length", win_args.min_length}};
        if (win_args.summary_only)
            emit_json({{"summary", streaklab::window_summary_json(analytics.summary)}}, config,
                      win_args.out);
        else if (win_args.as_json)
            emit_json(streaklab::window_analytics_json(analytics), config, win_args.out);
        else
            emit(streaklab::windows_csv(analytics), win_args.out);
    });

    // ---- opponent ----
    struct {
        std::string input, team, out;
        bool cumulative = false, as_json = false;
    } opp_args;
    auto* cmd_opp = app.add_subcommand("opponent", "career streak census against one opponent");
    cmd_opp->add_option("input", opp_args.input, "game-log CSV")->required();
    cmd_opp->add_option("--team", opp_args.team, "opponent team code")->required();
    cmd_opp->add_flag("--cumulative", opp_args.cumulative, "emit counts of length >= L");
    cmd_opp->add_flag("--json", opp_args.as_json, "JSON output");
    cmd_opp->add_option("--out", opp_args.out, "write to file instead of stdout");
    cmd_opp->callback([&] {
        const auto corpus = streaklab::load_gamelog_csv(opp_args.input);
        const auto c = streaklab::opponent_streaks(corpus, opp_args.team);
        if (opp_args.as_json)
            emit_json(streaklab::census_json(c),
                      {{"command", "opponent"}, {"input", opp_args.input}, {"team", opp_args.team}},
                      opp_args.out);
        else
            emit(streaklab::census_csv(c, opp_args.cumulative), opp_args.out);
    });

    // ---- synth ----
    auto* cmd_synth = app.add_subcommand("synth", "generate synthetic game-log corpora");
    cmd_synth->require_subcommand(1);

    struct {
        int players = 100, games = 150, season = 2000;
        double avg = 0.280, pinch_rate = 0.0;
        std::uint64_t seed = 0;
        std::vector<double> ab_weights;
        std::string out;
    } iid_args;
    auto* cmd_iid = cmd_synth->add_subcommand("iid", "independent identically distributed null corpus");
    cmd_iid->add_option("--players", iid_args.players, "number of player-seasons")
        ->check(CLI::PositiveNumber);
    cmd_iid->add_option("--games", iid_args.games, "games per season")->check(CLI::PositiveNumber);
    cmd_iid->add_option("--avg", iid_args.avg, "per-at-bat hit probability");
    cmd_iid->add_option("--pinch-rate", iid_args.pinch_rate, "probability a game is a non-start");
    cmd_iid->add_option("--season", iid_args.season, "season year to stamp");
    auto* iid_weights = cmd_iid->add_option("--ab-weights", iid_args.ab_weights,
                                            "weights for 0..6 at-bats (comma separated)")
                            ->delimiter(',');
    cmd_iid->add_option("--seed", iid_args.seed, "generator seed (required: runs must be reproducible)")
        ->required();
    cmd_iid->add_option("--out", iid_args.out, "write to file instead of stdout");
    cmd_iid->callback([&] {
        streaklab::IIDParams params;
        params.players = iid_args.players;
        params.games_per_season = iid_args.games;
        params.avg = iid_args.avg;
        params.pinch_rate = iid_args.pinch_rate;
        params.season = iid_args.season;
        params.seed = iid_args.seed;
        if (iid_weights->count()) params.ab_weights = parse_weights(iid_args.ab_weights, "--ab-weights");
        emit(streaklab::gamelog_csv_string(streaklab::gen_iid_corpus(params)), iid_args.out);
    });

    struct {
        int players = 100, games = 150, season = 2000;
        double p_hot = 0.0, p_cold = 0.0, stay = 0.95, pinch_rate = 0.0;
        std::uint64_t seed = 0;
        std::vector<double> ab_weights;
        std::string out;
    } hot_args;
    auto* cmd_hot = cmd_synth->add_subcommand("hothand", "hidden two-state (hot/cold) corpus");
    cmd_hot->add_option("--players", hot_args.players, "number of player-seasons")
        ->check(CLI::PositiveNumber);
    cmd_hot->add_option("--games", hot_args.games, "games per season")->check(CLI::PositiveNumber);
    cmd_hot->add_option("--p-hot", hot_args.p_hot, "per-at-bat hit probability in the hot state")
        ->required();
    cmd_hot->add_option("--p-cold", hot_args.p_cold, "per-at-bat hit probability in the cold state")
        ->required();
    cmd_hot->add_option("--stay", hot_args.stay, "per-game probability of keeping the state");
    cmd_hot->add_option("--pinch-rate", hot_args.pinch_rate, "probability a game is a non-start");
    cmd_hot->add_option("--season", hot_args.season, "season year to stamp");
    auto* hot_weights = cmd_hot->add_option("--ab-weights", hot_args.ab_weights,
                                            "weights for 0..6 at-bats (comma separated)")
                            ->delimiter(',');
    cmd_hot->add_option("--seed", hot_args.seed, "generator seed (required: runs must be reproducible)")
        ->required();
    cmd_hot->add_option("--out", hot_args.out, "write to file instead of stdout");
    cmd_hot->callback([&] {
        streaklab::HotHandParams params;
        params.base.players = hot_args.players;
        params.base.games_per_season = hot_args.games;
        params.base.avg = (hot_args.p_hot + hot_args.p_cold) / 2.0;
        params.base.pinch_rate = hot_args.pinch_rate;
        params.base.season = hot_args.season;
        params.base.seed = hot_args.seed;
        if (hot_weights->count())
            params.base.ab_weights = parse_weights(hot_args.ab_weights, "--ab-weights");
        params.p_hot = hot_args.p_hot;
        params.p_cold = hot_args.p_cold;
        params.stay_prob = hot_args.stay;
        emit(streaklab::gamelog_csv_string(streaklab::gen_hot_hand_corpus(params)), hot_args.out);
    });

    // ---- report ----
    struct {
        std::string census_path, study_path, out;
        std::vector<int> tails;
        bool as_json = false;
    } report_args;
    auto* cmd_report =
        app.add_subcommand("report", "observed census vs permutation null (z, tails, excess)");
    cmd_report->add_option("--census", report_args.census_path, "exact census CSV (from `count`)")
        ->required();
    cmd_report->add_option("--study", report_args.study_path, "study JSON (from `permute`)")
        ->required();
    auto* report_tails =
        cmd_report->add_option("--tails", report_args.tails, "cumulative tails (comma separated)")
            ->delimiter(',');
    cmd_report->add_flag("--json", report_args.as_json, "JSON output");
    cmd_report->add_option("--out", report_args.out, "write to file instead of stdout");
    cmd_report->callback([&] {
        const auto observed = streaklab::load_census_csv(report_args.census_path);
        const auto study = streaklab::load_study_json(report_args.study_path);
        std::vector<int> tails = report_args.tails;
        if (report_tails->count() == 0) {
            for (int t = 5; t <= study.max_length; t += 5)
                if (t >= study.min_length) tails.push_back(t);
        }
        const auto rows = streaklab::comparison_table(observed, study, tails);
        std::vector<std::optional<streaklab::EmpiricalTail>> empiricals;
        if (!study.per_trial_exact.empty()) {
            empiricals.reserve(rows.size());
            const std::size_t exact_rows = study.lengths();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i < exact_rows) {
                    std::vector<std::uint32_t> col(study.per_trial_exact.size());
                    for (std::size_t t = 0; t < col.size(); ++t)
                        col[t] = study.per_trial_exact[t][i];
                    empiricals.emplace_back(streaklab::empirical_tail(col, rows[i].observed));
                } else {
                    const int tail = tails[i - exact_rows];
                    empiricals.emplace_back(streaklab::empirical_tail(
                        study.per_trial_cumulative(tail), rows[i].observed));
                }
            }
        }
        const json config = {{"command", "report"},
                             {"census", report_args.census_path},
                             {"study", report_args.study_path},
                             {"tails", tails}};
        if (report_args.as_json)
            emit_json(streaklab::comparison_json(rows, empiricals), config, report_args.out);
        else
            emit(streaklab::comparison_csv(rows, empiricals), report_args.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const streaklab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
