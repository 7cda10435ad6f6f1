#pragma once

#include <cstdint>

namespace unirat {

// SplitMix64: the project's single deterministic random source. All sampled
// behavior flows from one explicit seed through this generator, so outputs
// are reproducible across platforms and thread counts.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n); the modulo bias is irrelevant for the tiny
    // ranges used here and keeps the stream platform-independent.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Inclusive range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace unirat
