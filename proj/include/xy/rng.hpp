// Counter-based pseudo-random numbers: every (seed, index) pair yields an
// independent reproducible stream, so parallel consumers stay deterministic.
#pragma once

#include <cstdint>

namespace xy {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Stream for one Monte Carlo sample, decorrelated from neighboring indices.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed) ^ mix64(index * 0xD1B54A32D192ED03ULL + 1));
}

}  // namespace xy
