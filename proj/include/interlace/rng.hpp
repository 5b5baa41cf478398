#pragma once

#include <cstdint>

namespace interlace {

// Deterministic pseudo-random generator (splitmix64). Every randomized
// suite in the project draws from this generator so that a fixed seed
// reproduces the exact same report on any platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is irrelevant for test-corpus
    // generation; determinism is what matters.
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    bool coin() { return next() & 1; }
};

}  // namespace interlace
