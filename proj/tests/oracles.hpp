#pragma once
// Independent reference implementations used only by tests. None of these
// share code paths with the library beyond PlaneGraph accessors and
// canonical_code (for dedup of embedded graphs).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/isomorphism.hpp>

#include <pw/pw.hpp>

namespace oracle {

using Adj = std::vector<std::vector<char>>; // 0-based adjacency matrix

inline Adj matrix(const pw::PlaneGraph& g) {
    int n = g.order();
    Adj a(n, std::vector<char>(n, 0));
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v)) a[v - 1][u - 1] = 1;
    return a;
}

inline bool connected_without(const Adj& a, std::uint32_t removed) {
    int n = static_cast<int>(a.size());
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed >> v & 1)) { ++alive; if (start < 0) start = v; }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> st{start};
    seen[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u = 0; u < n; ++u)
            if (a[v][u] && !seen[u] && !(removed >> u & 1)) { seen[u] = 1; ++cnt; st.push_back(u); }
    }
    return cnt == alive;
}

// Smallest vertex set whose removal disconnects; n-1 for complete graphs.
inline int brute_kappa(const Adj& a) {
    int n = static_cast<int>(a.size());
    for (int k = 0; k <= n - 2; ++k) {
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (std::popcount(s) != k) continue;
            if (!connected_without(a, s)) return k;
        }
    }
    return n - 1;
}

inline std::int64_t floyd_wiener(const pw::PlaneGraph& g) {
    int n = g.order();
    const int INF = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v)) d[v - 1][u - 1] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::int64_t w = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) w += d[i][j];
    return w;
}

inline std::vector<std::int64_t> floyd_transmissions(const pw::PlaneGraph& g) {
    int n = g.order();
    const int INF = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v)) d[v - 1][u - 1] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::vector<std::int64_t> t(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i] += d[i][j];
    return t;
}

// Every sequence (1, x_1, ..., x_d) with sum n, x_1..x_{d-1} >= delta, x_d >= 1.
inline void layer_sequences(int n, int delta, const std::function<void(const std::vector<std::int64_t>&)>& f) {
    std::vector<std::int64_t> x{1};
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) return;
        // close with the last layer
        x.push_back(left);
        f(x);
        x.pop_back();
        for (int v = delta; v < left; ++v) {
            x.push_back(v);
            rec(left - v);
            x.pop_back();
        }
    };
    rec(n - 1);
}

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;

inline std::vector<std::pair<int, int>> mask_edges(std::uint64_t mask, const std::vector<std::pair<int, int>>& all) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) es.push_back(all[i]);
    return es;
}

inline std::optional<pw::Rotation> planar_rotation(int n, const std::vector<std::pair<int, int>>& es) {
    BGraph g(n);
    int k = 0;
    for (auto [a, b] : es) boost::add_edge(a, b, k++, g);
    using E = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<E>> emb(n);
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = g,
            boost::boyer_myrvold_params::embedding =
                boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, g))))
        return std::nullopt;
    pw::Rotation rot(n);
    for (int v = 0; v < n; ++v)
        for (const auto& e : emb[v]) {
            int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
            rot[v].push_back((s == v ? t : s) + 1);
        }
    return rot;
}

// Number of simple plane triangulations on n vertices (mirror images
// identified): all planar edge sets of size 3n-6 on labelled vertices whose
// degree sequence is non-increasing in the label, deduplicated by the embedded
// code. Triangulations are 3-connected, so the embedding is unique up to
// reflection.
inline std::set<pw::Code> brute_triangulations(int n) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    const int M = static_cast<int>(all.size()), m = 3 * n - 6;
    std::vector<std::uint32_t> inc(n, 0);
    for (int i = 0; i < M; ++i) { inc[all[i].first] |= 1u << i; inc[all[i].second] |= 1u << i; }
    std::set<pw::Code> codes;
    if (m > M) return codes;
    std::uint64_t limit = 1ull << M;
    for (std::uint64_t s = (1ull << m) - 1; s < limit;) {
        std::uint32_t mask = static_cast<std::uint32_t>(s);
        bool ok = true;
        int prev = 1 << 30;
        for (int v = 0; v < n && ok; ++v) {
            int d = std::popcount(mask & inc[v]);
            if (d < 3 || d > prev) ok = false;
            prev = d;
        }
        if (ok)
            if (auto rot = planar_rotation(n, mask_edges(mask, all)))
                codes.insert(pw::canonical_code(pw::PlaneGraph::from_rotation(*rot)));
        std::uint64_t c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r; // next subset with the same popcount
    }
    return codes;
}

inline int count_faces(const pw::Rotation& rot) {
    int n = static_cast<int>(rot.size());
    // dart (v, i): v -> rot[v][i]; its twin is located by search, which is
    // fine for simple graphs
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v) seen[v].assign(rot[v].size(), 0);
    auto index_of = [&](int v, int u) {
        const auto& l = rot[v];
        return static_cast<int>(std::find(l.begin(), l.end(), u + 1) - l.begin());
    };
    int faces = 0;
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            if (seen[v][i]) continue;
            ++faces;
            int a = v, k = static_cast<int>(i);
            while (!seen[a][k]) {
                seen[a][k] = 1;
                int b = rot[a][k] - 1;
                int j = index_of(b, a);
                a = b;
                k = (j + 1) % static_cast<int>(rot[b].size());
            }
        }
    return faces;
}

// Every plane embedding (as rotation systems) of a simple connected graph.
inline void all_embeddings(int n, const std::vector<std::pair<int, int>>& es,
                           const std::function<void(const pw::Rotation&)>& f) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : es) { adj[a].push_back(b + 1); adj[b].push_back(a + 1); }
    int target = 2 - n + static_cast<int>(es.size());
    pw::Rotation rot(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (count_faces(rot) == target) f(rot);
            return;
        }
        // first neighbor fixed, permute the rest
        auto l = adj[v];
        std::sort(l.begin() + 1, l.end());
        do {
            rot[v] = l;
            rec(v + 1);
        } while (std::next_permutation(l.begin() + 1, l.end()));
    };
    rec(0);
}

// Number of simple plane quadrangulations on n vertices: connected planar
// subgraphs of K_{p,q} (p+q = n) with 2n-4 edges and minimum degree 2; every
// plane embedding of such a graph has only 4-faces. Abstract duplicates are
// removed with boost::isomorphism before enumerating embeddings.
inline std::set<pw::Code> brute_quadrangulations(int n) {
    std::set<pw::Code> codes;
    if (n == 4) {
        codes.insert(pw::canonical_code(pw::PlaneGraph::from_rotation(pw::detail::c4_rotation())));
        return codes;
    }
    std::vector<std::vector<std::pair<int, int>>> reps;
    auto to_boost = [n](const std::vector<std::pair<int, int>>& es) {
        BGraph g(n);
        int k = 0;
        for (auto [a, b] : es) boost::add_edge(a, b, k++, g);
        return g;
    };
    const int m = 2 * n - 4;
    for (int p = 2; p <= n / 2; ++p) {
        int q = n - p;
        std::vector<std::pair<int, int>> all;
        for (int a = 0; a < p; ++a)
            for (int b = p; b < n; ++b) all.emplace_back(a, b);
        const int M = static_cast<int>(all.size());
        if (m > M) continue;
        std::uint64_t limit = 1ull << M;
        for (std::uint64_t s = (1ull << m) - 1; s < limit;) {
            auto es = mask_edges(s, all);
            std::vector<int> deg(n, 0);
            for (auto [a, b] : es) { ++deg[a]; ++deg[b]; }
            bool ok = *std::min_element(deg.begin(), deg.end()) >= 2;
            if (ok) {
                Adj a(n, std::vector<char>(n, 0));
                for (auto [x, y] : es) a[x][y] = a[y][x] = 1;
                ok = connected_without(a, 0) && planar_rotation(n, es).has_value();
            }
            if (ok) {
                auto g = to_boost(es);
                bool dup = false;
                for (const auto& r : reps) {
                    auto h = to_boost(r);
                    if (boost::isomorphism(g, h)) { dup = true; break; }
                }
                if (!dup) reps.push_back(es);
            }
            std::uint64_t c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
        (void)q;
    }
    for (const auto& es : reps)
        all_embeddings(n, es, [&](const pw::Rotation& rot) {
            codes.insert(pw::canonical_code(pw::PlaneGraph::from_rotation(rot)));
        });
    return codes;
}

} // namespace oracle
