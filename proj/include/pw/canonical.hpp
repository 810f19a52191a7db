#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plane_graph.hpp"

namespace pw {

// Byte string: n, then for vertices in BFS label order their rotations as
// labels, each list closed by 0. Minimised over every starting dart and both
// orientations, so relabelling, re-rooting and reflection all give the same
// code. Only a minimum-degree root can win (its list closes first), so other
// roots are skipped.
using Code = std::string;

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const PlaneGraph& g) : g_(g) {}

    Code run() {
        int n = g_.order();
        int mindeg = g_.degree(1);
        for (int v = 2; v <= n; ++v) mindeg = std::min(mindeg, g_.degree(v));
        best_.clear();
        for (int v = 1; v <= n; ++v) {
            if (g_.degree(v) != mindeg) continue;
            for (int d = g_.first_dart(v), k = 0; k < mindeg; ++k, ++d) {
                try_root(d, true);
                try_root(d, false);
            }
        }
        if (best_.empty()) best_.push_back(static_cast<char>(n)); // single vertex
        return best_;
    }

private:
    void try_root(int d0, bool clockwise) {
        int n = g_.order();
        label_.assign(n + 1, 0);
        first_.assign(n + 1, -1);
        order_.clear();
        cur_.clear();
        cur_.push_back(static_cast<char>(n));
        // 0: still equal to best prefix, -1: already smaller, so just write
        int state = best_.empty() ? -1 : 0;
        auto emit = [&](int x) {
            char c = static_cast<char>(x);
            std::size_t pos = cur_.size();
            cur_.push_back(c);
            if (state == 0) {
                unsigned char b = static_cast<unsigned char>(best_[pos]);
                unsigned char a = static_cast<unsigned char>(c);
                if (a < b) state = -1;
                else if (a > b) return false;
            }
            return true;
        };
        int root = g_.tail(d0);
        label_[root] = 1;
        first_[root] = d0;
        order_.push_back(root);
        int next_label = 2;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int v = order_[i];
            int d = first_[v];
            for (int k = g_.degree(v); k > 0; --k) {
                int u = g_.head(d);
                if (!label_[u]) {
                    label_[u] = next_label++;
                    first_[u] = g_.twin(d);
                    order_.push_back(u);
                }
                if (!emit(label_[u])) return;
                d = clockwise ? g_.next(d) : g_.prev(d);
            }
            if (!emit(0)) return;
        }
        if (state == -1) best_.swap(cur_);
    }

    const PlaneGraph& g_;
    std::vector<int> label_, first_, order_;
    Code best_, cur_;
};

} // namespace detail

inline Code canonical_code(const PlaneGraph& g) { return detail::Canonizer(g).run(); }

// Inverse of the code layout: rebuild the (relabelled) plane graph.
inline PlaneGraph graph_from_code(const Code& code) {
    int n = static_cast<unsigned char>(code[0]);
    Rotation rot(n);
    int v = 0;
    for (std::size_t i = 1; i < code.size() && v < n; ++i) {
        int x = static_cast<unsigned char>(code[i]);
        if (x == 0) ++v;
        else rot[v].push_back(x);
    }
    return PlaneGraph::from_rotation(rot);
}

} // namespace pw
