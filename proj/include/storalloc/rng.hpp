#pragma once

#include <cstdint>

namespace storalloc {

// splitmix64; the per-sample/per-trial keys below make every draw a pure
// function of (seed, index), so any parallel schedule gives the same result.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix{seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))};
    mix.next();
    return mix.next();
}

// Uniform index in [0, n) by multiply-shift; bias is n / 2^64.
inline std::uint64_t bounded(std::uint64_t word, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(word) * n) >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace storalloc
