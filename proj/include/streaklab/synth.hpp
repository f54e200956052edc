#pragma once

#include <array>
#include <cstdint>

#include "streaklab/gamelog.hpp"

namespace streaklab {

// Per-game at-bat counts are drawn from a small discrete distribution; 0..6
// covers realistic box scores.
inline constexpr int kMaxAbPerGame = 6;
using AbWeights = std::array<double, kMaxAbPerGame + 1>;

struct IIDParams {
    int players = 100;
    int games_per_season = 150;
    double avg = 0.280;  // per-at-bat hit probability
    AbWeights ab_weights = {0.01, 0.02, 0.05, 0.15, 0.40, 0.30, 0.07};
    // With probability pinch_rate a game is a non-start drawn from the
    // low-AB pinch distribution.
    double pinch_rate = 0.0;
    AbWeights pinch_ab_weights = {0.55, 0.35, 0.10, 0.0, 0.0, 0.0, 0.0};
    std::uint64_t seed = 0;
    int season = 2000;
};

// Independent, identically distributed null: every at-bat is a Bernoulli(avg)
// draw, games carry no memory. Deterministic given the seed; each player has
// an independent derived stream, so generation order never matters.
Corpus gen_iid_corpus(const IIDParams& params);

struct HotHandParams {
    IIDParams base;  // base.avg must equal (p_hot + p_cold) / 2
    double p_hot = 0.0;
    double p_cold = 0.0;
    // Per-game probability of keeping the current hidden state. The chain is
    // symmetric, so the long-run per-at-bat hit probability is the midpoint
    // of p_hot and p_cold.
    double stay_prob = 0.95;
};

// Serially dependent alternative: a hidden two-state chain makes hot
// stretches hotter and cold stretches colder while season totals stay at the
// target average in expectation.
Corpus gen_hot_hand_corpus(const HotHandParams& params);

}  // namespace streaklab
