#pragma once

#include "../plane_graph.hpp"

namespace pw::detail {

inline Rotation k4_rotation() { return {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}; }

inline Rotation c4_rotation() { return {{2, 4}, {3, 1}, {4, 2}, {1, 3}}; }

// Ring 1..m, apex m+1 inside, apex m+2 outside. With ring edges this is the
// bipyramid (double wheel); without them it is K_{2,m}.
inline Rotation double_apex_rotation(int m, bool ring_edges) {
    Rotation r(m + 2);
    int in = m + 1, out = m + 2;
    for (int j = 1; j <= m; ++j) {
        int nxt = j % m + 1, prv = (j + m - 2) % m + 1;
        if (ring_edges) r[j - 1] = {in, nxt, out, prv};
        else r[j - 1] = {in, out};
    }
    for (int j = m; j >= 1; --j) r[in - 1].push_back(j);
    for (int j = 1; j <= m; ++j) r[out - 1].push_back(j);
    return r;
}

} // namespace pw::detail
