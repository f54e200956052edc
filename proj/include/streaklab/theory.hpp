#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streaklab/gamelog.hpp"

namespace streaklab {

// The functions here compute the independence NULL: games are treated as
// independent Bernoulli trials. That is the model the permutation study is
// designed to probe, not a description of real hitters.

// P(at least one hit in a game) = 1 - (1 - avg)^(ab_per_game). Fractional
// at-bats per game are allowed (real-valued exponent).
double per_game_hit_prob(double avg, double ab_per_game);

// games * per_game_hit_prob(avg, ab_per_game).
double expected_hit_games(double avg, double ab_per_game, int games);

// Exact probability that independent Bernoulli games with the given per-game
// hit probabilities contain a run of >= streak_len hit games. Dynamic program
// over trailing-run states 0..streak_len-1 with an absorbing success state;
// O(n * streak_len). Returns 0 when streak_len > n.
double longest_run_prob(std::span<const double> per_game_probs, int streak_len);

// Constant-probability convenience overload.
double longest_run_prob(double p, int games, int streak_len);

// Per-game hit probabilities implied by a season average and each game's
// actual at-bat count: p_i = 1 - (1 - avg)^ab_i.
std::vector<double> per_game_probs_from_log(const PlayerSeasonLog& log);

struct KHitGames {
    int k = 0;
    double expected = 0.0;        // sum over games of Binomial(ab_i, avg) at k
    std::uint64_t observed = 0;   // games with exactly k hits
};

// Expected vs observed count of exactly-k-hit games under the coin-flip
// model, using the log's own season average.
KHitGames expected_k_hit_games(const PlayerSeasonLog& log, int k);
// Same, with the per-at-bat hit probability supplied explicitly.
KHitGames expected_k_hit_games(const PlayerSeasonLog& log, int k, double avg);

struct ScenarioRow {
    int streak_len = 0;
    double prob_base = 0.0;
    double prob_boosted = 0.0;
    double relative_increase = 0.0;  // prob_boosted / prob_base - 1
};

// How much a season-long AB/G change moves the odds of long streaks for a
// fixed batting average.
std::vector<ScenarioRow> scenario_compare(double avg, int games, double abg_base,
                                          double abg_boosted, std::span<const int> streak_lens);

}  // namespace streaklab
