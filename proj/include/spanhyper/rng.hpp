#pragma once

#include <cstdint>
#include <initializer_list>

namespace spanhyper {

// splitmix64; all randomized routines take an explicit 64-bit seed and are
// pure functions of it, so reruns and parallel schedules cannot change output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0,bound) via 128-bit multiply; bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform in [lo,hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_u64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic sub-stream seed from a root seed and a path of indices,
// e.g. derive_seed(seed, {p_index, trial}).
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t x = mix_u64(seed + 0x9E3779B97F4A7C15ULL);
    for (std::uint64_t c : path) x = mix_u64(x ^ (mix_u64(c + 0x165667B19E3779F9ULL) + 0x9E3779B97F4A7C15ULL));
    return x;
}

}  // namespace spanhyper
