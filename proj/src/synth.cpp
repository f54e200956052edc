#include "streaklab/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "streaklab/rng.hpp"

namespace streaklab {

namespace {

void check_weights(const AbWeights& w, const char* what) {
    double sum = 0.0;
    for (double x : w) {
        if (!(x >= 0.0)) throw ConfigError(std::string(what) + " must be non-negative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError(std::string(what) + " must sum to 1 (got " + std::to_string(sum) + ")");
}

void check_base(const IIDParams& p) {
    if (p.players < 1) throw ConfigError("players must be >= 1");
    if (p.games_per_season < 1) throw ConfigError("games_per_season must be >= 1");
    if (!(p.avg >= 0.0 && p.avg <= 1.0)) throw ConfigError("avg must be in [0, 1]");
    if (!(p.pinch_rate >= 0.0 && p.pinch_rate <= 1.0))
        throw ConfigError("pinch_rate must be in [0, 1]");
    check_weights(p.ab_weights, "ab_weights");
    check_weights(p.pinch_ab_weights, "pinch_ab_weights");
}

std::string player_name(int index, int players) {
    int width = 1;
    for (int n = players; n >= 10; n /= 10) ++width;
    width = std::min(std::max(width, 4), 10);
    char buf[16];
    std::snprintf(buf, sizeof buf, "p%0*d", width, index + 1);
    return buf;
}

int draw_ab(StreamRng& rng, const AbWeights& weights) {
    const double u = uniform_unit(rng);
    double acc = 0.0;
    for (int ab = 0; ab <= kMaxAbPerGame; ++ab) {
        acc += weights[ab];
        if (u < acc) return ab;
    }
    return kMaxAbPerGame;
}

int draw_hits(StreamRng& rng, int ab, double p) {
    int hits = 0;
    for (int i = 0; i < ab; ++i)
        if (uniform_unit(rng) < p) ++hits;
    return hits;
}

// Shared generation loop; hot/cold state handling degenerates to IID when
// both state probabilities equal the average.
Corpus generate(const IIDParams& params, bool hot_hand, double p_hot, double p_cold,
                double stay_prob) {
    Corpus corpus;
    for (int pi = 0; pi < params.players; ++pi) {
        PlayerSeasonLog log;
        log.player_id = player_name(pi, params.players);
        log.season = params.season;
        log.lines.reserve(params.games_per_season);

        StreamRng rng(derive_stream_seed(params.seed, log.player_id, params.season, 0));
        bool hot = false;
        if (hot_hand) hot = uniform_unit(rng) < 0.5;

        for (int g = 1; g <= params.games_per_season; ++g) {
            BattingLine bl;
            bl.game_seq = g;
            const bool pinch = uniform_unit(rng) < params.pinch_rate;
            bl.started = !pinch;
            bl.ab = draw_ab(rng, pinch ? params.pinch_ab_weights : params.ab_weights);
            const double p = hot_hand ? (hot ? p_hot : p_cold) : params.avg;
            bl.hits = draw_hits(rng, bl.ab, p);
            log.lines.push_back(bl);
            if (hot_hand && uniform_unit(rng) >= stay_prob) hot = !hot;
        }
        corpus.logs.emplace(SeasonKey{log.player_id, log.season}, std::move(log));
    }
    return corpus;
}

}  // namespace

Corpus gen_iid_corpus(const IIDParams& params) {
    check_base(params);
    return generate(params, false, 0.0, 0.0, 0.0);
}

Corpus gen_hot_hand_corpus(const HotHandParams& params) {
    check_base(params.base);
    if (!(params.p_cold >= 0.0 && params.p_hot <= 1.0 && params.p_cold <= params.p_hot))
        throw ConfigError("need 0 <= p_cold <= p_hot <= 1");
    if (!(params.stay_prob >= 0.5 && params.stay_prob < 1.0))
        throw ConfigError("stay_prob must be in [0.5, 1)");
    const double midpoint = (params.p_hot + params.p_cold) / 2.0;
    if (std::abs(midpoint - params.base.avg) > 1e-9)
        throw ConfigError("avg must equal (p_hot + p_cold)/2; got " + std::to_string(params.base.avg) +
                          " vs midpoint " + std::to_string(midpoint));
    return generate(params.base, true, params.p_hot, params.p_cold, params.stay_prob);
}

}  // namespace streaklab
