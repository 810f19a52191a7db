#pragma once
// Small named plane graphs built from plain edge lists.

#include "oracles.hpp"

namespace shapes {

inline pw::PlaneGraph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    return pw::PlaneGraph::from_rotation(*oracle::planar_rotation(n, es));
}

inline pw::PlaneGraph k4() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline pw::PlaneGraph cube() {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) es.emplace_back(v, v ^ (1 << b));
    return from_edges(8, es);
}

inline pw::PlaneGraph octahedron() {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (b != a + 3) es.emplace_back(a, b);
    return from_edges(6, es);
}

inline pw::PlaneGraph icosahedron() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
        es.insert(es.end(), {{0, u}, {u, un}, {l, ln}, {u, l}, {un, l}, {11, l}});
    }
    return from_edges(12, es);
}

inline pw::PlaneGraph path(int n) {
    pw::Rotation r(n);
    for (int v = 1; v <= n; ++v) {
        if (v > 1) r[v - 1].push_back(v - 1);
        if (v < n) r[v - 1].push_back(v + 1);
    }
    return pw::PlaneGraph::from_rotation(r);
}

} // namespace shapes
