#pragma once

#include <cstdint>
#include <vector>

#include "plane_graph.hpp"
#include "rational.hpp"

namespace pw {

struct DistanceProfile {
    int root = 0;
    std::vector<int> layers; // layers[i] = number of vertices at distance i
    std::int64_t transmission = 0;

    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

namespace detail {

// BFS distances from v into dist (1-based, -1 for unreached); returns the visit order.
inline void bfs(const PlaneGraph& g, int v, std::vector<int>& dist, std::vector<int>& queue) {
    dist.assign(g.order() + 1, -1);
    queue.clear();
    queue.push_back(v);
    dist[v] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int u : g.neighbors(x))
            if (dist[u] < 0) { dist[u] = dist[x] + 1; queue.push_back(u); }
    }
}

} // namespace detail

inline DistanceProfile distance_profile(const PlaneGraph& g, int v) {
    if (v < 1 || v > g.order()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
    std::vector<int> dist, queue;
    detail::bfs(g, v, dist, queue);
    DistanceProfile p;
    p.root = v;
    for (int x : queue) {
        int d = dist[x];
        if (d >= static_cast<int>(p.layers.size())) p.layers.resize(d + 1, 0);
        ++p.layers[d];
        p.transmission += d;
    }
    return p;
}

// sigma(v) for every vertex; index 0 unused.
inline std::vector<std::int64_t> transmissions(const PlaneGraph& g) {
    std::vector<std::int64_t> t(g.order() + 1, 0);
    std::vector<int> dist, queue;
    for (int v = 1; v <= g.order(); ++v) {
        detail::bfs(g, v, dist, queue);
        std::int64_t s = 0;
        for (int x : queue) s += dist[x];
        t[v] = s;
    }
    return t;
}

inline std::int64_t wiener(const PlaneGraph& g) {
    std::int64_t s = 0;
    for (auto t : transmissions(g)) s += t;
    return s / 2;
}

struct Remoteness {
    Rational value;
    int vertex = 0;
    std::int64_t transmission = 0; // (n-1) * value
};

inline Remoteness remoteness(const PlaneGraph& g) {
    if (g.order() < 2) throw Error(Errc::OrderOutOfDomain, "remoteness needs n >= 2");
    auto t = transmissions(g);
    Remoteness r;
    for (int v = 1; v <= g.order(); ++v)
        if (r.vertex == 0 || t[v] > r.transmission) { r.vertex = v; r.transmission = t[v]; }
    r.value = Rational(r.transmission, g.order() - 1);
    return r;
}

// Wiener index and maximum transmission in one pass.
struct DistanceSummary {
    std::int64_t wiener = 0;
    std::int64_t max_transmission = 0;
};

inline DistanceSummary distance_summary(const PlaneGraph& g) {
    DistanceSummary s;
    auto t = transmissions(g);
    for (int v = 1; v <= g.order(); ++v) {
        s.wiener += t[v];
        s.max_transmission = std::max(s.max_transmission, t[v]);
    }
    s.wiener /= 2;
    return s;
}

} // namespace pw
