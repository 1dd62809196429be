#pragma once

#include <cstdint>

namespace nbcc {

// Size limits for the exponential-time solvers. Defaults keep the test suite
// at desk scale; the hard limits are what the bitset kernels can represent.
struct Caps {
    static constexpr std::uint32_t default_exact_cover = 20;
    static constexpr std::uint32_t default_enum_vertices = 8;
    static constexpr std::uint32_t default_max_t = 2;
    static constexpr std::uint32_t default_mis = 50;

    static constexpr std::uint32_t hard_exact_cover = 64;
    static constexpr std::uint32_t hard_enum_vertices = 10;
    static constexpr std::uint32_t hard_mis = 64;

    std::uint32_t exact_cover = default_exact_cover;
    std::uint32_t enum_vertices = default_enum_vertices;
    std::uint32_t max_t = default_max_t;
    std::uint32_t mis = default_mis;
};

} // namespace nbcc
