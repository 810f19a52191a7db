#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "detail/figure_data.hpp"
#include "detail/small_graphs.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "known_extremes.hpp"
#include "plane_graph.hpp"

namespace pw {

enum class FamilyId { T3, T4, T5_WIENER, T5_REMOTE_5K3, Q2, Q3, T_NONSIMPLE, Q_NONSIMPLE, T_MIN, Q_MIN };

inline constexpr FamilyId all_families[] = {FamilyId::T3,          FamilyId::T4,          FamilyId::T5_WIENER,
                                            FamilyId::T5_REMOTE_5K3, FamilyId::Q2,          FamilyId::Q3,
                                            FamilyId::T_NONSIMPLE, FamilyId::Q_NONSIMPLE, FamilyId::T_MIN,
                                            FamilyId::Q_MIN};

inline const char* family_name(FamilyId id) {
    switch (id) {
    case FamilyId::T3: return "T3";
    case FamilyId::T4: return "T4";
    case FamilyId::T5_WIENER: return "T5_WIENER";
    case FamilyId::T5_REMOTE_5K3: return "T5_REMOTE_5K3";
    case FamilyId::Q2: return "Q2";
    case FamilyId::Q3: return "Q3";
    case FamilyId::T_NONSIMPLE: return "T_NONSIMPLE";
    case FamilyId::Q_NONSIMPLE: return "Q_NONSIMPLE";
    case FamilyId::T_MIN: return "T_MIN";
    case FamilyId::Q_MIN: return "Q_MIN";
    }
    return "?";
}

inline std::optional<FamilyId> parse_family(std::string_view s) {
    for (auto id : all_families)
        if (s == family_name(id)) return id;
    return std::nullopt;
}

// Enumeration class the family lives in, when it has one.
inline std::optional<GraphClass> family_class(FamilyId id) {
    switch (id) {
    case FamilyId::T3: return GraphClass::TRI_3;
    case FamilyId::T4: return GraphClass::TRI_4;
    case FamilyId::T5_WIENER:
    case FamilyId::T5_REMOTE_5K3: return GraphClass::TRI_5;
    case FamilyId::Q2: return GraphClass::QUAD_2;
    case FamilyId::Q3: return GraphClass::QUAD_3;
    default: return std::nullopt;
    }
}

inline bool family_is_triangulation(FamilyId id) {
    switch (id) {
    case FamilyId::Q2:
    case FamilyId::Q3:
    case FamilyId::Q_NONSIMPLE:
    case FamilyId::Q_MIN: return false;
    default: return true;
    }
}

namespace detail {

struct Figure {
    std::string name;
    int order = 0;
    std::vector<std::string> names;          // vertex names in first-seen order
    std::vector<std::pair<int, int>> edges;  // indices into names
    std::vector<std::vector<int>> columns;
};

inline Figure parse_figure(const FigureData& d) {
    Figure f;
    f.name = std::string(d.name);
    f.order = d.order;
    std::map<std::string, int> index;
    auto id = [&](const std::string& s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(f.names.size()));
        if (fresh) f.names.push_back(s);
        return it->second;
    };
    std::istringstream es{std::string(d.edges)};
    for (std::string tok; es >> tok;) {
        auto dash = tok.find('-');
        f.edges.emplace_back(id(tok.substr(0, dash)), id(tok.substr(dash + 1)));
    }
    std::istringstream cs{std::string(d.columns)};
    f.columns.emplace_back();
    for (std::string tok; cs >> tok;) {
        if (tok == "|") f.columns.emplace_back();
        else f.columns.back().push_back(id(tok));
    }
    return f;
}

inline const Figure& figure(std::string_view name) {
    static const std::map<std::string, Figure, std::less<>> all = [] {
        std::map<std::string, Figure, std::less<>> m;
        for (const auto& d : figure_data) m.emplace(std::string(d.name), parse_figure(d));
        return m;
    }();
    return all.find(name)->second;
}

struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // 0-based
};

// Link pattern between consecutive columns and the edges inside one column,
// as role-index pairs.
struct ChainPattern {
    std::set<std::pair<int, int>> link, inner;
};

inline ChainPattern chain_pattern(const Figure& f, int from, int to) {
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : f.edges) es.insert({std::min(a, b), std::max(a, b)});
    auto has = [&](int a, int b) { return es.count({std::min(a, b), std::max(a, b)}) > 0; };
    ChainPattern p;
    const auto &A = f.columns[from], &B = f.columns[to];
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            if (has(A[i], B[j])) p.link.insert({static_cast<int>(i), static_cast<int>(j)});
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (has(A[i], A[j])) p.inner.insert({static_cast<int>(i), static_cast<int>(j)});
    return p;
}

// The drawing with its column chain replaced by `c` columns. Vertices outside
// the chain keep their edges: those nearer the first column stay attached
// counting from the front, the others counting from the back.
inline EdgeList rebuild_chain(const Figure& f, int c) {
    const int L = static_cast<int>(f.columns.size());
    const int w = static_cast<int>(f.columns.front().size());
    const int total = static_cast<int>(f.names.size());
    std::vector<int> col_of(total, -1), role_of(total, -1);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < w; ++j) { col_of[f.columns[i][j]] = i; role_of[f.columns[i][j]] = j; }

    std::vector<std::vector<int>> adj(total);
    for (auto [a, b] : f.edges) { adj[a].push_back(b); adj[b].push_back(a); }
    auto dist_to = [&](int src, int col) {
        std::vector<int> d(total, -1);
        std::vector<int> q{src};
        d[src] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int u : adj[q[i]])
                if (d[u] < 0) { d[u] = d[q[i]] + 1; q.push_back(u); }
        int best = total;
        for (int v : f.columns[col]) best = std::min(best, d[v]);
        return best;
    };

    EdgeList out;
    // chain vertices first, then the rest in drawing order
    auto cv = [&](int i, int j) { return i * w + j; };
    std::vector<int> rest_id(total, -1);
    int next = c * w;
    std::vector<char> front(total, 0);
    for (int v = 0; v < total; ++v)
        if (col_of[v] < 0) {
            rest_id[v] = next++;
            front[v] = dist_to(v, 0) <= dist_to(v, L - 1);
        }
    out.n = next;

    ChainPattern p = chain_pattern(f, 0, 1);
    std::set<std::pair<int, int>> es;
    auto add = [&](int a, int b) { es.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < c; ++i) {
        for (auto [a, b] : p.inner) add(cv(i, a), cv(i, b));
        if (i + 1 < c)
            for (auto [a, b] : p.link) add(cv(i, a), cv(i + 1, b));
    }
    for (auto [a, b] : f.edges) {
        if (col_of[a] >= 0 && col_of[b] >= 0) continue;
        if (col_of[a] >= 0) std::swap(a, b);
        if (col_of[b] < 0) { add(rest_id[a], rest_id[b]); continue; }
        int i = col_of[b];
        int k = front[a] ? i : c - (L - i);
        if (k < 0 || k >= c) throw std::logic_error("cap edge falls off the chain");
        add(rest_id[a], cv(k, role_of[b]));
    }
    out.edges.assign(es.begin(), es.end());
    return out;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

// Rotation system of a planar simple graph via Boyer-Myrvold.
inline Rotation embed(const EdgeList& el) {
    BoostGraph g(el.n);
    int k = 0;
    for (auto [a, b] : el.edges) boost::add_edge(a, b, k++, g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> emb(el.n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, g)));
    if (!planar) throw Error(Errc::NonPlanarEmbedding, "construction is not planar");
    Rotation rot(el.n);
    for (int v = 0; v < el.n; ++v)
        for (const auto& e : emb[v]) {
            int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
            rot[v].push_back((s == v ? t : s) + 1);
        }
    return rot;
}

struct Variant {
    std::string_view figure;
    int min_order;
};

// Drawing used for order n, if n is in the family's domain.
inline std::optional<Variant> figure_variant(FamilyId id, int n) {
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    switch (id) {
    case FamilyId::T3: {
        static const Variant v[] = {{"t3_0", 6}, {"t3_1", 7}, {"t3_2", 8}};
        return v[mod(n, 3)];
    }
    case FamilyId::T4: {
        static const Variant v[] = {{"t4_0", 8}, {"t4_1", 9}, {"t4_2", 6}, {"t4_3", 7}};
        return v[mod(n, 4)];
    }
    case FamilyId::T5_WIENER: {
        static const Variant v[] = {{"t5_0", 25}, {"t5_1", 26}, {"t5_2", 22}, {"t5_3", 23}, {"t5_4", 24}};
        return v[mod(n, 5)];
    }
    case FamilyId::T5_REMOTE_5K3:
        if (mod(n, 5) != 3) return std::nullopt;
        return Variant{"t5_3r", 23};
    case FamilyId::Q2: {
        static const Variant v[] = {{"q2_0", 4}, {"q2_1", 5}};
        return v[mod(n, 2)];
    }
    case FamilyId::Q3: {
        static const Variant v[] = {{"q3_0", 15}, {"q3_1", 16}, {"q3_2", 14}};
        return v[mod(n, 3)];
    }
    default: return std::nullopt;
    }
}

inline int family_period(FamilyId id) {
    switch (id) {
    case FamilyId::T3: return 3;
    case FamilyId::T4: return 4;
    case FamilyId::T5_WIENER:
    case FamilyId::T5_REMOTE_5K3: return 5;
    case FamilyId::Q2: return 2;
    case FamilyId::Q3: return 3;
    default: return 1;
    }
}

// Chain of K4s glued along doubled rungs a_i c_i, with a degree-2 vertex in
// each end lens. n = 2k + 2.
inline Rotation nonsimple_triangulation(int k) {
    auto a = [](int i) { return i; };
    auto c = [k](int i) { return k + i; };
    int x = 2 * k + 1, y = 2 * k + 2;
    Rotation r(2 * k + 2);
    for (int i = 1; i <= k; ++i) {
        auto& ra = r[a(i) - 1];
        auto& rc = r[c(i) - 1];
        ra.push_back(c(i));
        if (i == 1) ra.push_back(x);
        else { ra.push_back(a(i - 1)); ra.push_back(c(i - 1)); }
        ra.push_back(c(i));
        if (i == k) ra.push_back(y);
        else { ra.push_back(a(i + 1)); ra.push_back(c(i + 1)); }

        rc.push_back(a(i));
        if (i == 1) rc.push_back(x);
        else { rc.push_back(c(i - 1)); rc.push_back(a(i - 1)); }
        rc.push_back(a(i));
        if (i == k) rc.push_back(y);
        else { rc.push_back(c(i + 1)); rc.push_back(a(i + 1)); }
    }
    r[x - 1] = {a(1), c(1)};
    r[y - 1] = {a(k), c(k)};
    return r;
}

// Ladder of 4-cycles a_i a_{i+1} c_{i+1} c_i whose inner rungs are doubled.
// n = 2k.
inline Rotation nonsimple_quadrangulation(int k) {
    auto a = [](int i) { return i; };
    auto c = [k](int i) { return k + i; };
    Rotation r(2 * k);
    for (int i = 1; i <= k; ++i) {
        auto& ra = r[a(i) - 1];
        auto& rc = r[c(i) - 1];
        if (i == 1) {
            ra = {c(1), a(2)};
            rc = {a(1), c(2)};
        } else if (i == k) {
            ra = {a(k - 1), c(k)};
            rc = {c(k - 1), a(k)};
        } else {
            ra = {c(i), a(i - 1), c(i), a(i + 1)};
            rc = {a(i), c(i - 1), a(i), c(i + 1)};
        }
    }
    return r;
}

} // namespace detail

// Smallest order accepted for the residue class of n, or nullopt when the
// residue itself is outside the domain.
inline std::optional<int> family_min_order(FamilyId id, int n) {
    switch (id) {
    case FamilyId::T_NONSIMPLE: return n % 2 == 0 ? std::optional<int>(16) : std::nullopt;
    case FamilyId::Q_NONSIMPLE: return n % 2 == 0 ? std::optional<int>(14) : std::nullopt;
    case FamilyId::T_MIN: return 5;
    case FamilyId::Q_MIN: return 4;
    default: {
        auto v = detail::figure_variant(id, n);
        if (!v) return std::nullopt;
        return v->min_order;
    }
    }
}

inline bool family_accepts(FamilyId id, int n) {
    auto m = family_min_order(id, n);
    return m && n >= *m;
}

inline PlaneGraph build_family(FamilyId id, int n) {
    if (!family_accepts(id, n))
        throw Error(Errc::OrderOutOfDomain, std::string(family_name(id)) + " has no member of order " + std::to_string(n));
    switch (id) {
    case FamilyId::T_NONSIMPLE: return PlaneGraph::from_rotation(detail::nonsimple_triangulation((n - 2) / 2));
    case FamilyId::Q_NONSIMPLE: return PlaneGraph::from_rotation(detail::nonsimple_quadrangulation(n / 2));
    case FamilyId::T_MIN: return PlaneGraph::from_rotation(detail::double_apex_rotation(n - 2, true));
    case FamilyId::Q_MIN: return PlaneGraph::from_rotation(detail::double_apex_rotation(n - 2, false));
    default: break;
    }
    const auto& fig = detail::figure(detail::figure_variant(id, n)->figure);
    int period = static_cast<int>(fig.columns.front().size());
    int c = static_cast<int>(fig.columns.size()) + (n - fig.order) / period;
    return PlaneGraph::from_rotation(detail::embed(detail::rebuild_chain(fig, c)));
}

// First order of n's residue class from which the built graph is expected to
// reach the closed-form Wiener value: the family floor, pushed past any
// tabulated order where the known maximum differs from the formula.
inline std::optional<int> formula_agreement_order(FamilyId id, int n) {
    auto floor = family_min_order(id, n);
    if (!floor) return std::nullopt;
    if (id == FamilyId::T_NONSIMPLE || id == FamilyId::Q_NONSIMPLE) return floor;
    auto cls = family_class(id);
    if (!cls || id == FamilyId::T5_REMOTE_5K3) return std::nullopt;
    const int p = detail::family_period(id);
    int from = *floor;
    for (const auto& k : known_extremes(*cls)) {
        if (k.order < *floor || (k.order - n) % p != 0) continue;
        if (k.max_wiener != conjectured_wiener(*cls, k.order)) from = std::max(from, k.order + p);
    }
    return from;
}

inline int family_kappa(FamilyId id) {
    if (auto c = family_class(id)) return class_kappa(*c);
    switch (id) {
    case FamilyId::T_MIN: return 3;
    case FamilyId::Q_MIN: return 2;
    default: return 2; // non-simple chains are cut by a doubled rung
    }
}

enum class GadgetKind { F_P, F_P_OUTER, Q_P };

inline PlaneGraph build_gadget(GadgetKind kind, int p) {
    detail::EdgeList el;
    auto add = [&](int a, int b) { el.edges.emplace_back(a, b); };
    if (kind == GadgetKind::Q_P) {
        if (p < 4 || p % 2) throw Error(Errc::BadGadgetParameter, "Q_p needs even p >= 4");
        // u_i = i, v_i = p + i, z = 2p
        el.n = 2 * p + 1;
        for (int i = 0; i < p; ++i) {
            add(i, (i + 1) % p);
            add(p + i, p + (i + 1) % p);
            add(i, p + i);
            if (i % 2 == 0) add(2 * p, p + i);
        }
        return PlaneGraph::from_rotation(detail::embed(el));
    }
    if (p < 3) throw Error(Errc::BadGadgetParameter, "F_p needs p >= 3");
    // u_i = i, v_i = p + i, w_i = 3p + i, z = 5p
    const int q = 2 * p;
    el.n = 5 * p + 1;
    auto u = [](int i) { return i; };
    auto v = [p, q](int i) { return p + ((i % q) + q) % q; };
    auto w = [p, q](int i) { return 3 * p + ((i % q) + q) % q; };
    for (int i = 0; i < p; ++i) {
        add(u(i), u((i + 1) % p));
        add(u(i), v(2 * i - 1));
        add(u(i), v(2 * i));
        add(u(i), v(2 * i + 1));
    }
    for (int i = 0; i < q; ++i) {
        add(v(i), v(i + 1));
        add(w(i), w(i + 1));
        add(v(i), w(i));
        add(v(i), w(i + 1));
        add(5 * p, w(i));
    }
    PlaneGraph g = PlaneGraph::from_rotation(detail::embed(el));
    return kind == GadgetKind::F_P_OUTER ? g.mirrored() : g;
}

// Diameter-two graphs: the bipyramid over C_{n-2}, and K_{2,n-2}.
inline PlaneGraph build_minimizer(PlaneClass cls, int n) {
    return build_family(cls == PlaneClass::triangulation ? FamilyId::T_MIN : FamilyId::Q_MIN, n);
}

} // namespace pw
