#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "plane_graph.hpp"

namespace pw {

struct ConnectivityResult {
    int kappa = 0;
    std::vector<int> witness_cut; // sorted vertex ids
};

// Simple adjacency, 1-based (index 0 unused), parallel edges collapsed.
using Adjacency = std::vector<std::vector<int>>;

inline Adjacency simple_adjacency(const PlaneGraph& g) {
    Adjacency adj(g.order() + 1);
    for (int v = 1; v <= g.order(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
        std::sort(adj[v].begin(), adj[v].end());
        adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
    }
    return adj;
}

namespace detail {

// Vertex-split digraph: in(v) = 2v, out(v) = 2v + 1.
class SplitNetwork {
public:
    explicit SplitNetwork(const Adjacency& adj) : n_(static_cast<int>(adj.size()) - 1) {
        head_.assign(2 * (n_ + 1), -1);
        int big = n_ + 1;
        for (int v = 1; v <= n_; ++v) add(2 * v, 2 * v + 1, 1);
        for (int v = 1; v <= n_; ++v)
            for (int u : adj[v]) add(2 * v + 1, 2 * u, big);
        base_cap_ = cap_;
    }

    // Number of internally disjoint s-t paths, stopping once `limit` is reached.
    int max_flow(int s, int t, int limit) {
        cap_ = base_cap_;
        int src = 2 * s + 1, snk = 2 * t;
        int flow = 0;
        std::vector<int> pred(head_.size());
        while (flow < limit) {
            std::fill(pred.begin(), pred.end(), -1);
            std::vector<int> queue{src};
            pred[src] = -2;
            for (std::size_t i = 0; i < queue.size() && pred[snk] == -1; ++i) {
                int x = queue[i];
                for (int e = head_[x]; e >= 0; e = next_[e])
                    if (cap_[e] > 0 && pred[to_[e]] == -1) {
                        pred[to_[e]] = e;
                        queue.push_back(to_[e]);
                    }
            }
            if (pred[snk] == -1) break;
            for (int x = snk; x != src; x = to_[pred[x] ^ 1]) {
                --cap_[pred[x]];
                ++cap_[pred[x] ^ 1];
            }
            ++flow;
        }
        return flow;
    }

    // After a max_flow that stopped short of its limit: split vertices whose
    // in-node is reachable from s in the residual network but out-node is not.
    std::vector<int> min_cut(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> queue{2 * s + 1};
        seen[2 * s + 1] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            for (int e = head_[x]; e >= 0; e = next_[e])
                if (cap_[e] > 0 && !seen[to_[e]]) { seen[to_[e]] = 1; queue.push_back(to_[e]); }
        }
        std::vector<int> cut;
        for (int v = 1; v <= n_; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
        return cut;
    }

private:
    void add(int a, int b, int c) {
        to_.push_back(b); cap_.push_back(c); next_.push_back(head_[a]); head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a); cap_.push_back(0); next_.push_back(head_[b]); head_[b] = static_cast<int>(to_.size()) - 1;
    }

    int n_;
    std::vector<int> head_, to_, cap_, next_, base_cap_;
};

} // namespace detail

inline ConnectivityResult vertex_connectivity(const Adjacency& adj) {
    int n = static_cast<int>(adj.size()) - 1;
    ConnectivityResult res;
    if (n <= 1) return res;
    int v = 1;
    for (int x = 2; x <= n; ++x)
        if (adj[x].size() < adj[v].size()) v = x;

    std::vector<char> near(n + 1, 0);
    near[v] = 1;
    for (int u : adj[v]) near[u] = 1;
    auto adjacent = [&](int a, int b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };

    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        if (!near[u]) pairs.emplace_back(v, u);
    for (std::size_t i = 0; i < adj[v].size(); ++i)
        for (std::size_t j = i + 1; j < adj[v].size(); ++j)
            if (!adjacent(adj[v][i], adj[v][j])) pairs.emplace_back(adj[v][i], adj[v][j]);

    if (pairs.empty()) { res.kappa = n - 1; return res; }

    detail::SplitNetwork net(adj);
    int best = std::numeric_limits<int>::max();
    for (auto [s, t] : pairs) {
        int f = net.max_flow(s, t, best);
        if (f < best) {
            best = f;
            res.witness_cut = net.min_cut(s);
        }
    }
    res.kappa = best;
    return res;
}

inline ConnectivityResult vertex_connectivity(const PlaneGraph& g) {
    return vertex_connectivity(simple_adjacency(g));
}

} // namespace pw
