#pragma once

#include <cstdint>

namespace nbcc {

// splitmix64 stream. Every random draw in the library goes through this type
// so runs are bit-reproducible from a seed on any platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): top 53 bits of one draw.
    constexpr double uniform() noexcept
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi) from one draw.
    constexpr double uniform(double lo, double hi) noexcept
    {
        return lo + (hi - lo) * uniform();
    }

    // Integer in [0, bound) as next() % bound; bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept
    {
        return next() % bound;
    }

private:
    std::uint64_t state_;
};

// Seed of the index-th trial under a master seed: the index-th output of the
// master stream.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    SplitMix64 rng(master);
    std::uint64_t value = rng.next();
    for (std::uint64_t i = 0; i < index; ++i)
        value = rng.next();
    return value;
}

} // namespace nbcc
