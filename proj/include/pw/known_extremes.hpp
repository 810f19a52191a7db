#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "formulas.hpp"

namespace pw {

// Extremal values from published exhaustive searches, per class and order.
// A class with no members has all fields zero.
struct KnownExtreme {
    int order;
    std::int64_t max_wiener, wiener_count, max_transmission, transmission_count;
};

namespace detail {

inline constexpr KnownExtreme known_tri_3[] = {
    {4, 6, 1, 3, 1},
    {5, 11, 1, 5, 1},
    {6, 18, 2, 7, 1},
    {7, 27, 5, 9, 4},
    {8, 39, 2, 12, 2},
    {9, 54, 1, 15, 4},
    {10, 72, 1, 18, 17},
    {11, 94, 1, 22, 7},
    {12, 120, 1, 26, 25},
    {13, 150, 1, 30, 107},
    {14, 185, 1, 35, 35},
    {15, 225, 1, 40, 171},
    {16, 270, 1, 45, 743},
    {17, 321, 1, 51, 217},
    {18, 378, 1, 57, 1199},
};

inline constexpr KnownExtreme known_tri_4[] = {
    {6, 18, 1, 6, 1},
    {7, 27, 1, 8, 1},
    {8, 38, 2, 10, 2},
    {9, 51, 4, 12, 4},
    {10, 68, 1, 15, 4},
    {11, 87, 1, 18, 6},
    {12, 110, 1, 21, 16},
    {13, 135, 1, 24, 50},
    {14, 166, 1, 28, 24},
    {15, 199, 1, 32, 66},
    {16, 238, 1, 36, 186},
    {17, 279, 1, 40, 653},
    {18, 328, 1, 45, 250},
    {19, 379, 1, 50, 879},
    {20, 438, 1, 55, 2599},
    {21, 499, 1, 60, 9429},
    {22, 570, 1, 66, 3313},
};

inline constexpr KnownExtreme known_tri_5[] = {
    {12, 108, 1, 18, 1},
    {13, 0, 0, 0, 0},
    {14, 159, 1, 23, 1},
    {15, 189, 1, 26, 1},
    {16, 222, 2, 29, 1},
    {17, 259, 1, 34, 1},
    {18, 300, 1, 37, 1},
    {19, 342, 1, 41, 2},
    {20, 391, 1, 45, 4},
    {21, 444, 1, 49, 9},
    {22, 500, 2, 55, 4},
    {23, 560, 1, 59, 11},
    {24, 630, 1, 64, 36},
    {25, 702, 1, 69, 66},
    {26, 780, 1, 74, 193},
    {27, 867, 1, 81, 39},
    {28, 955, 1, 86, 240},
    {29, 1053, 1, 92, 805},
    {30, 1156, 1, 98, 1470},
    {31, 1265, 1, 104, 4327},
    {32, 1384, 1, 112, 763},
};

inline constexpr KnownExtreme known_quad_2[] = {
    {4, 8, 1, 4, 1},
    {5, 14, 1, 6, 1},
    {6, 23, 1, 9, 1},
    {7, 34, 2, 12, 1},
    {8, 50, 1, 16, 1},
    {9, 68, 1, 20, 1},
    {10, 93, 1, 25, 1},
    {11, 120, 1, 30, 1},
    {12, 156, 1, 36, 1},
    {13, 194, 1, 42, 1},
    {14, 243, 1, 49, 1},
    {15, 294, 1, 56, 1},
    {16, 358, 1, 64, 1},
    {17, 424, 1, 72, 1},
    {18, 505, 1, 81, 1},
    {19, 588, 1, 90, 1},
    {20, 688, 1, 100, 1},
};

inline constexpr KnownExtreme known_quad_3[] = {
    {8, 48, 1, 12, 1},
    {9, 0, 0, 0, 0},
    {10, 83, 1, 17, 1},
    {11, 106, 1, 22, 1},
    {12, 136, 1, 24, 2},
    {13, 164, 1, 29, 2},
    {14, 201, 1, 35, 2},
    {15, 240, 1, 38, 6},
    {16, 288, 2, 44, 7},
    {17, 344, 1, 51, 5},
    {18, 401, 1, 55, 26},
    {19, 468, 1, 62, 33},
    {20, 544, 1, 70, 22},
    {21, 622, 1, 75, 136},
    {22, 711, 1, 83, 172},
    {23, 810, 1, 92, 97},
    {24, 912, 1, 98, 729},
    {25, 1026, 1, 107, 923},
    {26, 1151, 1, 117, 505},
    {27, 1280, 1, 124, 3930},
    {28, 1422, 1, 134, 4959},
};

} // namespace detail

inline std::span<const KnownExtreme> known_extremes(GraphClass c) {
    switch (c) {
    case GraphClass::TRI_3: return detail::known_tri_3;
    case GraphClass::TRI_4: return detail::known_tri_4;
    case GraphClass::TRI_5: return detail::known_tri_5;
    case GraphClass::QUAD_2: return detail::known_quad_2;
    case GraphClass::QUAD_3: return detail::known_quad_3;
    }
    return {};
}

inline std::optional<KnownExtreme> known_extreme(GraphClass c, int n) {
    for (const auto& k : known_extremes(c))
        if (k.order == n) return k;
    return std::nullopt;
}

} // namespace pw
