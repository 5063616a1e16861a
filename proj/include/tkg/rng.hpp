#pragma once

#include <cstdint>
#include <initializer_list>

namespace tkg {

// SplitMix64 (Steele, Lea, Flood 2014). Used everywhere instead of the
// standard <random> engines/distributions so that sampling is bit-identical
// across platforms and standard library implementations.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    constexpr std::uint64_t next_below(std::uint64_t n) noexcept {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    constexpr double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream seed from a master seed and a path of
// indices (e.g. {resample_index, period_index}). Deterministic and free of
// correlations between adjacent paths thanks to the SplitMix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = master;
    for (std::uint64_t p : path) {
        SplitMix64 mix(s ^ (p + 0x9e3779b97f4a7c15ULL));
        s = mix.next();
    }
    return s;
}

}  // namespace tkg
