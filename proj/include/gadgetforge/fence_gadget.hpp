#pragma once

#include <array>
#include <cstdint>

namespace gadgetforge::fence {

// Local vertex numbering: v1..v6 are 0..5 (the outer 6-cycle), v7 is 6 and v8
// is 7. v7 sees v1, v2, v6; v8 sees v3, v4, v5; v7 and v8 are adjacent.
inline constexpr std::uint32_t size = 8;
inline constexpr std::uint32_t outer_count = 6;
inline constexpr std::uint32_t v7 = 6;
inline constexpr std::uint32_t v8 = 7;
inline constexpr std::uint32_t internal_edge_count = 13;

inline constexpr std::array<std::array<std::uint32_t, 2>, internal_edge_count> edges{{
    {0, 1}, {0, 6}, {0, 5}, {1, 6}, {1, 2}, {2, 7}, {2, 3},
    {3, 4}, {3, 7}, {4, 5}, {4, 7}, {5, 6}, {6, 7},
}};

constexpr auto is_outer(std::uint32_t local) -> bool { return local < outer_count; }
constexpr auto is_inner(std::uint32_t local) -> bool { return local == v7 || local == v8; }

constexpr auto adjacency_masks() -> std::array<std::uint8_t, size>
{
    std::array<std::uint8_t, size> masks{};
    for (auto [a, b] : edges) {
        masks[a] |= static_cast<std::uint8_t>(1u << b);
        masks[b] |= static_cast<std::uint8_t>(1u << a);
    }
    return masks;
}

inline constexpr auto adjacency = adjacency_masks();

// Automorphism group (Klein four-group): identity, the reflection fixing v1
// and v4, the half-turn v1<->v4, v2<->v5, v3<->v6, v7<->v8, and their product.
inline constexpr std::array<std::array<std::uint32_t, size>, 4> automorphisms{{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 5, 4, 3, 2, 1, 6, 7},
    {3, 4, 5, 0, 1, 2, 7, 6},
    {3, 2, 1, 0, 5, 4, 7, 6},
}};

} // namespace gadgetforge::fence
