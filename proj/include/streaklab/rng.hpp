#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace streaklab {

// All randomized code in this library draws from per-stream mt19937_64
// engines whose seeds are derived by hashing the stream identity. The
// standard fixes mt19937_64 output exactly, and the bounded draw below is
// our own, so results are reproducible across platforms and independent of
// how work is partitioned over threads.

using StreamRng = std::mt19937_64;

inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer: full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Collision-resistant seed for one (player-season, stream) pair. Identical
// inputs always give identical seeds, so a study can hand streams to any
// number of workers in any order.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view player_id,
                                        int season, std::uint64_t stream_index) {
    std::uint64_t h = mix64(master_seed + kGolden64);
    h = mix64(h ^ fnv1a64(player_id));
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::int64_t>(season)) + kGolden64));
    h = mix64(h ^ (stream_index + kGolden64));
    return h;
}

// Unbiased draw from [0, n) by rejection from the top of the 64-bit range.
// n must be >= 1.
template <class Urbg>
std::uint64_t uniform_below(Urbg& gen, std::uint64_t n) {
    static_assert(Urbg::min() == 0 && Urbg::max() == ~std::uint64_t{0},
                  "uniform_below needs a full-range 64-bit generator");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % n;
    }
}

// Uniform double in [0, 1) with 53 random bits.
template <class Urbg>
double uniform_unit(Urbg& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// In-place exchange shuffle; every permutation of v is equally likely.
template <class T, class Urbg>
void fisher_yates_shuffle(std::vector<T>& v, Urbg& gen) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(gen, i));
        if (j != i - 1) std::swap(v[i - 1], v[j]);
    }
}

}  // namespace streaklab
