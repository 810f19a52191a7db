#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"

namespace pw {

using Rotation = std::vector<std::vector<int>>;

// Connected plane graph stored as a rotation system. Vertices are 1..n.
// Each vertex owns a contiguous block of darts in clockwise order.
//
// Parallel edges: the j-th copy of u in the list of v is paired with the
// (k-1-j)-th copy of v in the list of u, k being the multiplicity. Going
// around the other endpoint reverses the order of a bundle, so lists
// written from one planar drawing satisfy this once each bundle is read
// starting from the same side.
class PlaneGraph {
public:
    PlaneGraph() = default;

    static PlaneGraph from_rotation(const Rotation& rot) {
        PlaneGraph g;
        g.init(rot);
        return g;
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(head_.size()) / 2; }
    int dart_count() const { return static_cast<int>(head_.size()); }
    int degree(int v) const { return off_[v] - off_[v - 1]; }

    std::span<const int> neighbors(int v) const {
        return {head_.data() + off_[v - 1], static_cast<std::size_t>(degree(v))};
    }

    int first_dart(int v) const { return off_[v - 1]; }
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return head_[d]; }
    int twin(int d) const { return twin_[d]; }
    int next(int d) const {
        int v = tail_[d];
        return d + 1 == off_[v] ? off_[v - 1] : d + 1;
    }
    int prev(int d) const {
        int v = tail_[d];
        return d == off_[v - 1] ? off_[v] - 1 : d - 1;
    }
    // Successor of d along its face.
    int face_next(int d) const { return next(twin_[d]); }

    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(int d) const { return face_of_[d]; }
    const std::vector<std::vector<int>>& face_darts() const { return faces_; }

    bool is_simple() const { return simple_; }

    Rotation rotation() const {
        Rotation r(n_);
        for (int v = 1; v <= n_; ++v) {
            auto nb = neighbors(v);
            r[v - 1].assign(nb.begin(), nb.end());
        }
        return r;
    }

    // Mirror image: every rotation reversed.
    PlaneGraph mirrored() const {
        Rotation r = rotation();
        for (auto& l : r) std::reverse(l.begin(), l.end());
        return from_rotation(r);
    }

private:
    void init(const Rotation& rot);

    int n_ = 0;
    bool simple_ = true;
    std::vector<int> off_;
    std::vector<int> tail_, head_, twin_, face_of_;
    std::vector<std::vector<int>> faces_;
};

inline void PlaneGraph::init(const Rotation& rot) {
    n_ = static_cast<int>(rot.size());
    if (n_ == 0) throw Error(Errc::Disconnected, "empty graph");
    off_.assign(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) off_[v] = off_[v - 1] + static_cast<int>(rot[v - 1].size());
    int darts = off_[n_];
    if (darts % 2) throw Error(Errc::AsymmetricDarts, "odd number of darts");
    tail_.resize(darts);
    head_.resize(darts);
    for (int v = 1; v <= n_; ++v) {
        int d = off_[v - 1];
        for (int u : rot[v - 1]) {
            if (u < 1 || u > n_) throw Error(Errc::UnknownVertex, "neighbor " + std::to_string(u));
            if (u == v) throw Error(Errc::LoopEdge, "loop at " + std::to_string(v));
            tail_[d] = v;
            head_[d] = u;
            ++d;
        }
    }

    // Pair darts bundle by bundle.
    std::vector<std::tuple<int, int, int>> keyed(darts);
    for (int d = 0; d < darts; ++d) keyed[d] = {tail_[d], head_[d], d};
    std::sort(keyed.begin(), keyed.end());
    auto bundle = [&](int v, int u) {
        auto lo = std::lower_bound(keyed.begin(), keyed.end(), std::make_tuple(v, u, -1));
        auto hi = std::lower_bound(keyed.begin(), keyed.end(), std::make_tuple(v, u + 1, -1));
        return std::make_pair(lo, hi);
    };
    twin_.assign(darts, -1);
    simple_ = true;
    for (std::size_t i = 0; i < keyed.size();) {
        auto [v, u, d0] = keyed[i];
        std::size_t j = i;
        while (j < keyed.size() && std::get<0>(keyed[j]) == v && std::get<1>(keyed[j]) == u) ++j;
        int k = static_cast<int>(j - i);
        if (k > 1) simple_ = false;
        if (v < u) {
            auto [lo, hi] = bundle(u, v);
            if (hi - lo != k)
                throw Error(Errc::AsymmetricDarts,
                            std::to_string(v) + " and " + std::to_string(u) + " disagree");
            for (int t = 0; t < k; ++t) {
                int a = std::get<2>(keyed[i + t]);
                int b = std::get<2>(*(lo + (k - 1 - t)));
                twin_[a] = b;
                twin_[b] = a;
            }
        }
        i = j;
    }
    for (int d = 0; d < darts; ++d)
        if (twin_[d] < 0)
            throw Error(Errc::AsymmetricDarts,
                        std::to_string(head_[d]) + " omits " + std::to_string(tail_[d]));

    // Connectivity.
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v))
            if (!seen[u]) { seen[u] = 1; ++reached; stack.push_back(u); }
    }
    if (reached != n_) throw Error(Errc::Disconnected, "graph is not connected");

    // Faces.
    face_of_.assign(darts, -1);
    faces_.clear();
    for (int d = 0; d < darts; ++d) {
        if (face_of_[d] >= 0) continue;
        int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        int e = d;
        do {
            face_of_[e] = f;
            faces_.back().push_back(e);
            e = face_next(e);
        } while (e != d);
    }
    int F = darts == 0 ? 1 : face_count();
    if (n_ - darts / 2 + F != 2)
        throw Error(Errc::NonPlanarEmbedding,
                    "n - m + F = " + std::to_string(n_ - darts / 2 + F));
}

inline PlaneGraph build_from_rotation(const Rotation& rot) { return PlaneGraph::from_rotation(rot); }

// Face boundaries as vertex walks.
inline std::vector<std::vector<int>> trace_faces(const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(g.face_count());
    for (const auto& f : g.face_darts()) {
        std::vector<int> walk;
        walk.reserve(f.size());
        for (int d : f) walk.push_back(g.tail(d));
        out.push_back(std::move(walk));
    }
    return out;
}

struct ClassReport {
    int n = 0;
    int m = 0;
    int face_count = 0;
    bool is_simple = false;
    bool is_bipartite = false;
    bool is_triangulation = false;
    bool is_quadrangulation = false;
    std::vector<int> face_lengths; // sorted
};

inline bool is_bipartite(const PlaneGraph& g) {
    std::vector<int> color(g.order() + 1, -1);
    std::vector<int> queue{1};
    color[1] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int u : g.neighbors(v)) {
            if (color[u] < 0) { color[u] = 1 - color[v]; queue.push_back(u); }
            else if (color[u] == color[v]) return false;
        }
    }
    return true;
}

inline ClassReport classify(const PlaneGraph& g) {
    ClassReport r;
    r.n = g.order();
    r.m = g.size();
    r.face_count = g.face_count();
    r.is_simple = g.is_simple();
    r.is_bipartite = is_bipartite(g);
    for (const auto& f : g.face_darts()) r.face_lengths.push_back(static_cast<int>(f.size()));
    std::sort(r.face_lengths.begin(), r.face_lengths.end());
    bool any = !r.face_lengths.empty();
    r.is_triangulation = any && r.face_lengths.front() == 3 && r.face_lengths.back() == 3;
    r.is_quadrangulation = any && r.face_lengths.front() == 4 && r.face_lengths.back() == 4;
    return r;
}

} // namespace pw
