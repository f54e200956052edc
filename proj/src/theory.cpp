#include "streaklab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace streaklab {

namespace {

void check_avg(double avg) {
    if (!(avg >= 0.0 && avg <= 1.0)) throw DomainError("avg must be in [0, 1]");
}

double binom_pmf(int n, int k, double p) {
    if (k < 0 || k > n) return 0.0;
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1.0) return k == n ? 1.0 : 0.0;
    double coeff = 1.0;
    for (int i = 0; i < k; ++i) coeff = coeff * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return coeff * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

}  // namespace

double per_game_hit_prob(double avg, double ab_per_game) {
    check_avg(avg);
    if (!(ab_per_game > 0.0)) throw DomainError("ab_per_game must be > 0");
    return 1.0 - std::pow(1.0 - avg, ab_per_game);
}

double expected_hit_games(double avg, double ab_per_game, int games) {
    if (games < 1) throw DomainError("games must be >= 1");
    return static_cast<double>(games) * per_game_hit_prob(avg, ab_per_game);
}

double longest_run_prob(std::span<const double> per_game_probs, int streak_len) {
    if (streak_len < 1) throw DomainError("streak_len must be >= 1");
    for (double p : per_game_probs)
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("per-game probabilities must be in [0, 1]");
    const std::size_t n = per_game_probs.size();
    if (static_cast<std::size_t>(streak_len) > n) return 0.0;

    // state[r] = P(no run of streak_len yet, current trailing run == r)
    std::vector<double> state(streak_len, 0.0), next(streak_len, 0.0);
    state[0] = 1.0;
    double absorbed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = per_game_probs[i];
        double alive = 0.0;
        for (double s : state) alive += s;
        next[0] = alive * (1.0 - p);
        for (int r = 0; r + 1 < streak_len; ++r) next[r + 1] = state[r] * p;
        absorbed += state[streak_len - 1] * p;
        std::swap(state, next);
    }
    return std::clamp(absorbed, 0.0, 1.0);
}

double longest_run_prob(double p, int games, int streak_len) {
    if (games < 0) throw DomainError("games must be >= 0");
    const std::vector<double> probs(static_cast<std::size_t>(games), p);
    return longest_run_prob(probs, streak_len);
}

std::vector<double> per_game_probs_from_log(const PlayerSeasonLog& log) {
    const double avg = season_stats(log).avg;
    std::vector<double> probs;
    probs.reserve(log.lines.size());
    for (const BattingLine& bl : log.lines)
        probs.push_back(1.0 - std::pow(1.0 - avg, static_cast<double>(bl.ab)));
    return probs;
}

KHitGames expected_k_hit_games(const PlayerSeasonLog& log, int k) {
    return expected_k_hit_games(log, k, season_stats(log).avg);
}

KHitGames expected_k_hit_games(const PlayerSeasonLog& log, int k, double avg) {
    if (k < 0) throw DomainError("k must be >= 0");
    check_avg(avg);
    KHitGames out;
    out.k = k;
    for (const BattingLine& bl : log.lines) {
        out.expected += binom_pmf(bl.ab, k, avg);
        if (bl.hits == k) ++out.observed;
    }
    return out;
}

std::vector<ScenarioRow> scenario_compare(double avg, int games, double abg_base,
                                          double abg_boosted, std::span<const int> streak_lens) {
    const double p_base = per_game_hit_prob(avg, abg_base);
    const double p_boost = per_game_hit_prob(avg, abg_boosted);
    std::vector<ScenarioRow> rows;
    rows.reserve(streak_lens.size());
    for (int len : streak_lens) {
        ScenarioRow row;
        row.streak_len = len;
        row.prob_base = longest_run_prob(p_base, games, len);
        row.prob_boosted = longest_run_prob(p_boost, games, len);
        if (row.prob_base > 0.0)
            row.relative_increase = row.prob_boosted / row.prob_base - 1.0;
        else
            row.relative_increase = row.prob_boosted > 0.0
                                        ? std::numeric_limits<double>::infinity()
                                        : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace streaklab
