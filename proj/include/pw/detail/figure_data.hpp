#pragma once

#include <string_view>

namespace pw::detail {

// Transcribed drawings. `edges` lists u-v pairs; `columns` is the ordered chain
// of repeatable columns, each column listing its vertices in role order.
struct FigureData {
    std::string_view name;
    int order;
    std::string_view edges;
    std::string_view columns;
};

inline constexpr FigureData figure_data[] = {
    {"t3_0", 15,
         "a1-a2 a2-a3 a3-a4 a4-a5 b1-b2 b2-b3 b3-b4 b4-b5 c1-c2 c2-c3 c3-c4 c4-c5 a1-b1 b1-c1 "
         "c1-a1 a2-b2 b2-c2 c2-a2 a3-b3 b3-c3 c3-a3 a4-b4 b4-c4 c4-a4 a5-b5 b5-c5 c5-a5 c1-a2 "
         "c1-b2 c2-a3 c2-b3 c3-a4 c3-b4 c4-a5 c4-b5 a1-b2 a2-b3 a3-b4 a4-b5 ",
         "a1 b1 c1 | a2 b2 c2 | a3 b3 c3 | a4 b4 c4 | a5 b5 c5"},
    {"t3_1", 16,
         "a1-a2 a2-a3 a3-a4 a4-a5 b1-b2 b2-b3 b3-b4 b4-b5 c1-c2 c2-c3 c3-c4 c4-c5 a1-b1 b1-c1 "
         "c1-a1 a2-b2 b2-c2 c2-a2 a3-b3 b3-c3 c3-a3 a4-b4 b4-c4 c4-a4 a5-b5 b5-c5 c5-a5 c1-a2 "
         "c1-b2 c2-a3 c2-b3 c3-a4 c3-b4 c4-a5 c4-b5 a1-b2 a2-b3 a3-b4 a4-b5 c6-a1 c6-b1 c6-c1 ",
         "a1 b1 c1 | a2 b2 c2 | a3 b3 c3 | a4 b4 c4 | a5 b5 c5"},
    {"t3_2", 17,
         "a1-a2 a2-a3 a3-a4 a4-a5 b1-b2 b2-b3 b3-b4 b4-b5 c1-c2 c2-c3 c3-c4 c4-c5 a1-b1 b1-c1 "
         "c1-a1 a2-b2 b2-c2 c2-a2 a3-b3 b3-c3 c3-a3 a4-b4 b4-c4 c4-a4 a5-b5 b5-c5 c5-a5 c1-a2 "
         "c1-b2 c2-a3 c2-b3 c3-a4 c3-b4 c4-a5 c4-b5 a1-b2 a2-b3 a3-b4 a4-b5 c6-a1 c6-b1 c6-c1 "
         "a6-c6 a6-a1 a6-b1 ",
         "a1 b1 c1 | a2 b2 c2 | a3 b3 c3 | a4 b4 c4 | a5 b5 c5"},
    {"t4_2", 18,
         "e1-a1 a1-b1 b1-c1 c1-d1 d1-e2 e1-a2 a2-b2 b2-c2 c2-d2 d2-e2 e1-a3 a3-b3 b3-c3 c3-d3 "
         "d3-e2 e1-a4 a4-b4 b4-c4 c4-d4 d4-e2 a1-a2 a2-a4 a4-a3 a3-a1 b1-b2 b2-b4 b4-b3 b3-b1 "
         "c1-c2 c2-c4 c4-c3 c3-c1 d1-d2 d2-d4 d4-d3 d3-d1 b1-a2 b1-a3 c1-b2 c1-b3 d1-c2 d1-c3 "
         "a4-b2 a4-b3 b4-c2 b4-c3 c4-d2 c4-d3 ",
         "a1 a2 a3 a4 | b1 b2 b3 b4 | c1 c2 c3 c4 | d1 d2 d3 d4"},
    {"t4_3", 19,
         "e1-a1 a1-b1 b1-c1 c1-d1 d1-e2 e1-a2 a2-b2 b2-c2 c2-d2 d2-e2 e1-a3 a3-b3 b3-c3 c3-d3 "
         "d3-e2 e1-a4 a4-b4 b4-c4 c4-d4 d4-e3 a1-a2 a2-a4 a4-a3 a3-a1 b1-b2 b2-b4 b4-b3 b3-b1 "
         "c1-c2 c2-c4 c4-c3 c3-c1 d1-d2 d2-d4 d4-d3 d3-d1 b1-a2 b1-a3 c1-b2 c1-b3 d1-c2 d1-c3 "
         "a4-b2 a4-b3 b4-c2 b4-c3 c4-d2 c4-d3 e2-e3 e3-d2 e3-d3 ",
         "a1 a2 a3 a4 | b1 b2 b3 b4 | c1 c2 c3 c4 | d1 d2 d3 d4"},
    {"t4_0", 20,
         "e1-a1 a1-b1 b1-c1 c1-d1 d1-e2 e1-a2 a2-b2 b2-c2 c2-d2 d2-e2 e1-a3 a3-b3 b3-c3 c3-d3 "
         "d3-e2 e1-a4 a4-b4 b4-c4 c4-d4 d4-e3 a1-a2 a2-a4 a4-a3 a3-a1 b1-b2 b2-b4 b4-b3 b3-b1 "
         "c1-c2 c2-c4 c4-c3 c3-c1 d1-d2 d2-d4 d4-d3 d3-d1 b1-a2 b1-a3 c1-b2 c1-b3 d1-c2 d1-c3 "
         "a4-b2 a4-b3 b4-c2 b4-c3 c4-d2 c4-d3 e2-e3 e3-d3 e3-e4 e4-e2 e4-d2 e4-d4 ",
         "a1 a2 a3 a4 | b1 b2 b3 b4 | c1 c2 c3 c4 | d1 d2 d3 d4"},
    {"t4_1", 21,
         "e1-a1 a1-b1 b1-c1 c1-d1 d1-e2 e1-a2 a2-b2 b2-c2 c2-d2 d2-e2 e1-a3 a3-b3 b3-c3 c3-d3 "
         "d3-e2 e1-a4 a4-b4 b4-c4 c4-d4 d4-e5 a1-a2 a2-a4 a4-a3 a3-a1 b1-b2 b2-b4 b4-b3 b3-b1 "
         "c1-c2 c2-c4 c4-c3 c3-c1 d1-d2 d2-d4 d4-d3 d3-d1 b1-a2 b1-a3 c1-b2 c1-b3 d1-c2 d1-c3 "
         "a4-b2 a4-b3 b4-c2 b4-c3 c4-d2 c4-d3 e2-e3 e3-e5 e5-e4 e4-e2 d4-e3 d4-e4 d2-e3 d3-e4 "
         "e5-e2 ",
         "a1 a2 a3 a4 | b1 b2 b3 b4 | c1 c2 c3 c4 | d1 d2 d3 d4"},
    {"t5_2", 27,
         "s1-s2 s2-s4 s4-s5 s5-s3 s3-s1 a1-a2 a2-a4 a4-a5 a5-a3 a3-a1 b1-b2 b2-b4 b4-b5 b5-b3 "
         "b3-b1 c1-c2 c2-c4 c4-c5 c5-c3 c3-c1 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s1 s1-a1 a1-b1 "
         "b1-c1 c1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-c5 c5-d5 d5-z2 z1-s2 z1-s3 z1-s4 z2-d2 z2-d3 "
         "z2-d4 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 b2-c2 b3-c3 b4-c4 a1-b2 a1-b3 "
         "a2-b2 a2-b4 a3-b3 a3-b5 a4-b4 a4-b5 b1-c2 b1-c3 b2-c4 b3-c5 b4-c5 c1-d2 c2-d1 c2-d3 "
         "c3-d2 c3-d4 c4-d3 c4-d5 c5-d4 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5 | c1 c2 c3 c4 c5"},
    {"t5_3", 28,
         "z1-s1 s1-a1 a1-b1 b1-e1 e1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-c5 c5-d5 d5-z2 s1-s2 s2-s4 "
         "s4-s5 s5-s3 s3-s1 a1-a2 a2-a4 a4-a5 a5-a3 a3-a1 b1-b2 b2-b4 b4-b5 b5-b3 b3-b1 c1-c3 "
         "c3-c5 c5-c4 c4-c2 e1-c1 e1-c2 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s2 z1-s3 z1-s4 z2-d2 "
         "z2-d3 z2-d4 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 b1-c1 b1-c2 b1-c3 a1-b2 "
         "a1-b3 a2-b2 a2-b4 a3-b3 a3-b5 a4-b4 a4-b5 b2-c2 b2-c4 b3-c3 b3-c5 b4-c4 b4-c5 e1-d2 "
         "c1-d1 c1-d3 c2-d2 c2-d4 c3-d3 c3-d5 c4-d4 c4-d5 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5"},
    {"t5_3r", 28,
         "z1-s1 s1-a1 a1-b1 b1-c1 c1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-c5 c5-d5 d5-z2 a1-a2 a2-a4 "
         "a4-a5 a5-a3 a3-a1 b1-b2 b2-b4 b4-b5 b5-b3 b3-b1 c1-c3 c3-c5 c5-c4 c4-e1 e1-c1 s1-s3 "
         "s3-s5 s5-s4 s4-s2 s2-s1 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s2 z1-s3 z1-s4 z2-d2 z2-d3 "
         "z2-d4 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 a1-b2 a1-b3 a2-b2 a2-b4 a3-b3 "
         "a3-b5 a4-b4 a4-b5 b1-e1 b2-c1 b2-c3 b3-e1 b3-c4 b4-c3 b4-c5 b5-c4 d1-c2 d2-c1 d2-c3 "
         "d3-c2 d3-c4 d4-c3 d4-c5 d5-c4 c2-c1 c2-c4 c2-e1 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5"},
    {"t5_4", 29,
         "z1-s1 s1-a1 a1-b1 b1-c1 c1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-c5 c5-e3 e3-d5 d5-z2 a1-a2 "
         "a2-a4 a4-a5 a5-a3 a3-a1 s1-s2 s2-s4 s4-s5 s5-s3 s3-s1 b1-b3 b3-b5 b5-b4 b4-b2 b2-b1 "
         "c1-c3 c3-c5 c5-c4 c4-c2 c2-c1 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s2 z1-s3 z1-s4 z2-d2 "
         "z2-d3 z2-d4 a1-b2 a1-b3 a2-b2 a2-b4 a3-b3 a3-b5 a4-b4 a4-b5 b1-c2 b1-c3 b2-c2 b2-c4 "
         "b3-c3 b3-c5 b4-c4 b4-c5 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 c1-e1 c1-d2 "
         "c2-d2 c2-d4 c3-e1 c3-e3 c4-d4 c4-d5 c4-e3 e1-e3 e1-d1 e1-d3 e3-d3 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5 | c1 c2 c3 c4 c5"},
    {"t5_0", 30,
         "z1-s1 s1-a1 a1-b1 b1-e1 e1-c1 c1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-e3 e3-c5 c5-d5 d5-z2 "
         "s1-s2 s2-s4 s4-s5 s5-s3 s3-s1 a1-a2 a2-a4 a4-a5 a5-a3 a3-a1 b1-b3 b3-b5 b5-b4 b4-b2 "
         "b2-b1 c1-c3 c3-c5 c5-c4 c4-c2 c2-c1 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s2 z1-s3 z1-s4 "
         "z2-d2 z2-d3 z2-d4 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 a2-b1 a1-b3 a2-b2 "
         "a2-b4 a3-b3 a3-b5 a4-b4 a4-b5 b1-e2 b2-c2 b2-e1 b2-c4 b3-e2 b3-e3 b4-c4 b4-e3 c2-e1 "
         "c3-e2 c3-e1 c4-e3 c5-e2 e1-e2 e2-e3 c1-d2 c2-d1 c2-d3 c3-d2 c3-d4 c4-d3 c4-d5 c5-d4 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5 | e1 c2 e2 c4 e3"},
    {"t5_1", 31,
         "z1-s1 s1-a1 a1-b1 b1-e1 e1-c1 c1-d1 d1-z2 z1-s5 s5-a5 a5-b5 b5-e3 e3-e4 e4-c5 c5-d5 "
         "d5-z2 a1-a2 a2-a4 a4-a5 a5-a3 a3-a1 b1-b3 b3-b5 b5-b4 b4-b2 b2-b1 s1-s3 s3-s5 s5-s4 "
         "s4-s2 s2-s1 c1-c3 c3-c5 c5-c4 c4-c2 c2-c1 d1-d2 d2-d4 d4-d5 d5-d3 d3-d1 z1-s2 z1-s3 "
         "z1-s4 z2-d2 z2-d3 z2-d4 s1-a2 s2-a1 s2-a3 s3-a2 s3-a4 s4-a3 s4-a5 s5-a4 b1-c1 b1-c2 "
         "b2-e2 b2-c2 b3-e1 b3-e3 b4-e2 b4-e3 c2-e2 c3-e1 c3-e4 c4-e2 c4-e4 e1-e3 e1-e4 e2-e3 "
         "e2-e4 c1-d2 c2-d1 c2-d3 c3-d2 c3-d4 c4-d3 c4-d5 c5-d4 a1-b2 a1-b3 a2-b2 a2-b4 a3-b3 "
         "a3-b5 a4-b4 a4-b5 ",
         "a1 a2 a3 a4 a5 | b1 b2 b3 b4 b5 | c1 c2 e1 e2 e3"},
    {"q2_0", 14,
         "a1-a2 a2-a3 a4-a5 a5-a6 a6-a7 a3-a4 c1-c2 c3-c4 c4-c5 c5-c6 c6-c7 c2-c3 c1-a1 c2-a2 "
         "c3-a3 c4-a4 c5-a5 c6-a6 c7-a7 c1-a3 c2-a4 c3-a5 c4-a6 c5-a7 ",
         "a2 c1 | a3 c2 | a4 c3 | a5 c4 | a6 c5 | a7 c6"},
    {"q2_1", 15,
         "b1-b2 b2-b3 b4-b5 b5-b6 b6-b7 b7-b8 b3-b4 a1-a2 a3-a4 a4-a5 a5-a6 a6-a7 a2-a3 b3-a1 "
         "b4-a2 b5-a3 b6-a4 b7-a5 b8-a6 b1-a1 b2-a2 b3-a3 b4-a4 b5-a5 b6-a6 b7-a7 ",
         "b2 a1 | b3 a2 | b4 a3 | b5 a4 | b6 a5 | b7 a6"},
    {"q3_2", 26,
         "d1-d2 d2-d4 d4-d3 d3-d1 d5-d6 d6-d8 d8-d7 d7-d5 d6-b1 b1-b2 b2-b3 b3-b4 b4-e3 d4-d8 "
         "d2-d6 d3-d7 d1-d5 e3-e4 e4-e8 e8-e7 e7-e3 e1-e2 e2-e6 e6-e5 e5-e1 e4-e2 e5-e7 e1-e3 "
         "e6-e8 d4-a2 a2-a3 a3-a4 a4-e1 d8-c1 c1-c2 c2-c3 c3-e5 d4-b1 b1-c1 a2-b2 b2-c2 a3-b3 "
         "b3-c3 a4-b4 b4-e5 a2-c1 a3-c2 a4-c3 ",
         "d2 d6 d8 | d4 b1 c1 | a2 b2 c2 | a3 b3 c3 | a4 b4 e5 | e1 e3 e7"},
    {"q3_0", 27,
         "e3-e4 e4-e8 e8-e7 e7-e3 e1-e2 e2-e6 e6-e5 e5-e1 e4-e2 e5-e7 e1-e3 e6-e8 d1-d2 d2-d4 "
         "d4-d3 d3-d1 d5-d6 d6-d8 d8-d7 d7-d5 d4-d8 d2-d6 d3-d7 d1-d5 d2-a1 a1-a2 a2-a3 a3-a4 "
         "a4-e1 d4-b1 b1-b2 b2-b3 b3-b4 b4-e3 d8-c1 c1-c2 c2-c3 c3-e5 a1-b1 b1-c1 a2-b2 b2-c2 "
         "a3-b3 b3-c3 a4-b4 b4-e5 d8-a1 c1-a2 c2-a3 c3-a4 ",
         "d2 d4 d8 | a1 b1 c1 | a2 b2 c2 | a3 b3 c3 | a4 b4 e5 | e1 e3 e7"},
    {"q3_1", 28,
         "d1-d2 d2-d4 d4-d3 d3-d1 d5-d6 d6-d8 d8-d7 d7-d5 d4-d8 d2-d6 d3-d7 d1-d5 e3-e4 e4-e8 "
         "e8-e7 e7-e3 e1-e2 e2-e6 e6-e5 e5-e1 e4-e2 e5-e7 e1-e3 e6-e8 d2-a1 a1-a2 a2-a3 a3-a4 "
         "a4-e1 d4-b1 b1-b2 b2-b3 b3-b4 b4-e3 d6-c1 c1-c2 c2-c3 c3-c4 c4-e5 a1-b1 b1-c2 a2-b2 "
         "b2-c3 a3-b3 b3-c4 a4-b4 b4-e5 d4-c1 c1-a1 c2-a2 c3-a3 c4-a4 ",
         "d2 d4 c1 | a1 b1 c2 | a2 b2 c3 | a3 b3 c4 | a4 b4 e5 | e1 e3 e7"},
};

} // namespace pw::detail
