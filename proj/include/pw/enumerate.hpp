#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "connectivity.hpp"
#include "detail/small_graphs.hpp"
#include "metrics.hpp"
#include "plane_graph.hpp"

namespace pw {

enum class PlaneClass { triangulation, quadrangulation };

inline const char* plane_class_name(PlaneClass c) {
    return c == PlaneClass::triangulation ? "triangulation" : "quadrangulation";
}

struct GenerateOptions {
    int jobs = 0; // 0: hardware concurrency
};

namespace detail {

inline int worker_count(int jobs) {
    if (jobs > 0) return jobs;
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

// Runs fn(i, worker) for i in [0, count) on `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    int w = std::min<int>(worker_count(jobs), static_cast<int>(std::max<std::size_t>(count, 1)));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i, t);
        });
    for (auto& th : pool) th.join();
}

inline int dart_pos(const PlaneGraph& g, int d) { return d - g.first_dart(g.tail(d)); }

inline void insert_before(std::vector<int>& l, int anchor, int x) {
    l.insert(std::find(l.begin(), l.end(), anchor), x);
}

inline void insert_after(std::vector<int>& l, int anchor, int x) {
    l.insert(std::find(l.begin(), l.end(), anchor) + 1, x);
}

// Vertex splitting (inverse edge contraction) on a triangulation. The new
// vertex w takes the neighbours strictly between positions i < j of v.
template <class Emit>
void expand_triangulation(const PlaneGraph& g, bool interior_only, Emit&& emit) {
    const Rotation base = g.rotation();
    const int w = g.order() + 1;
    for (int v = 1; v <= g.order(); ++v) {
        const auto& r = base[v - 1];
        int deg = static_cast<int>(r.size());
        for (int i = 0; i < deg; ++i)
            for (int j = i + 1; j < deg; ++j) {
                int k = j - i - 1, l = deg - (j - i) - 1;
                if (interior_only && (k < 1 || l < 1)) continue;
                Rotation c = base;
                c.emplace_back();
                int a = r[i], b = r[j];
                auto& rv = c[v - 1];
                rv.clear();
                rv.push_back(a);
                rv.push_back(w);
                for (int t = j; t != i; t = (t + 1) % deg) rv.push_back(r[t]);
                auto& rw = c[w - 1];
                for (int t = i; t <= j; ++t) rw.push_back(r[t]);
                rw.push_back(v);
                insert_before(c[a - 1], v, w);
                insert_after(c[b - 1], v, w);
                for (int t = i + 1; t < j; ++t) std::replace(c[r[t] - 1].begin(), c[r[t] - 1].end(), v, w);
                emit(std::move(c));
            }
    }
}

// Face insertion (degree-2 vertex across a face) and vertex splitting into a
// new face, both on a quadrangulation.
template <class Emit>
void expand_quadrangulation(const PlaneGraph& g, Emit&& emit) {
    const Rotation base = g.rotation();
    const int z = g.order() + 1;
    for (const auto& f : g.face_darts()) {
        if (f.size() != 4) continue;
        for (int s = 0; s < 2; ++s) {
            int d_in0 = f[(s + 3) % 4], d_in2 = f[(s + 1) % 4];
            int w0 = g.head(d_in0), w2 = g.head(d_in2);
            if (w0 == w2) continue;
            Rotation c = base;
            c.emplace_back();
            auto& r0 = c[w0 - 1];
            r0.insert(r0.begin() + dart_pos(g, g.twin(d_in0)) + 1, z);
            auto& r2 = c[w2 - 1];
            r2.insert(r2.begin() + dart_pos(g, g.twin(d_in2)) + 1, z);
            c[z - 1] = {w0, w2};
            emit(std::move(c));
        }
    }
    for (int v = 1; v <= g.order(); ++v) {
        const auto& r = base[v - 1];
        int deg = static_cast<int>(r.size());
        for (int i = 0; i < deg; ++i)
            for (int j = i + 1; j < deg; ++j) {
                int b = r[i], d = r[j];
                if (b == d) continue;
                Rotation c = base;
                c.emplace_back();
                auto& rv = c[v - 1];
                rv.clear();
                for (int t = j; t != i; t = (t + 1) % deg) rv.push_back(r[t]);
                rv.push_back(b);
                auto& rw = c[z - 1];
                for (int t = i; t <= j; ++t) rw.push_back(r[t]);
                insert_after(c[d - 1], v, z);
                insert_before(c[b - 1], v, z);
                for (int t = i + 1; t < j; ++t) std::replace(c[r[t] - 1].begin(), c[r[t] - 1].end(), v, z);
                emit(std::move(c));
            }
    }
}

inline int deficiency(const Rotation& r, int target) {
    int s = 0;
    for (const auto& l : r) s += std::max(0, target - static_cast<int>(l.size()));
    return s;
}

// For a triangulation: no separating triangle iff the number of triangles
// equals the number of faces 2n - 4. Needs n <= 64.
inline bool no_separating_triangle(const Rotation& r) {
    int n = static_cast<int>(r.size());
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : r[v]) adj[v] |= std::uint64_t{1} << (u - 1);
    int triangles = 0;
    for (int v = 0; v < n; ++v)
        for (int u : r[v])
            if (u - 1 > v) {
                std::uint64_t common = adj[v] & adj[u - 1];
                common &= ~((std::uint64_t{2} << (u - 1)) - 1);
                triangles += std::popcount(common);
            }
    return triangles == 2 * n - 4;
}

struct LevelRule {
    PlaneClass cls;
    int target;       // order being generated
    int kappa_min;    // 3,4,5 for triangulations; 2,3 for quadrangulations
};

inline bool accept_child(const LevelRule& rule, const Rotation& c) {
    int h = static_cast<int>(c.size());
    if (rule.cls == PlaneClass::triangulation) {
        if (rule.kappa_min >= 4 && !no_separating_triangle(c)) return false;
        if (rule.kappa_min >= 5 && deficiency(c, 5) > 2 * (rule.target - h)) return false;
        return true;
    }
    if (rule.kappa_min >= 3 && deficiency(c, 3) > 2 * (rule.target - h)) return false;
    return true;
}

inline std::vector<Code> expand_level(const std::vector<Code>& parents, const LevelRule& rule, int jobs) {
    int w = worker_count(jobs);
    std::vector<std::unordered_set<Code>> local(w);
    parallel_for(parents.size(), jobs, [&](std::size_t i, int t) {
        PlaneGraph g = graph_from_code(parents[i]);
        auto sink = [&](Rotation&& c) {
            if (!accept_child(rule, c)) return;
            local[t].insert(canonical_code(PlaneGraph::from_rotation(c)));
        };
        if (rule.cls == PlaneClass::triangulation) expand_triangulation(g, rule.kappa_min >= 4, sink);
        else expand_quadrangulation(g, sink);
    });
    std::unordered_set<Code> all;
    for (auto& s : local) {
        all.merge(s);
    }
    std::vector<Code> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline int generation_floor(PlaneClass cls, int kappa_min) {
    if (cls == PlaneClass::triangulation) return kappa_min >= 4 ? 6 : 4;
    return 4;
}

// Candidate codes at order n: a superset of the graphs with kappa >= kappa_min
// (exact for kappa_min 2 and 3 on triangulations, 2 on quadrangulations).
inline std::vector<Code> candidate_codes(PlaneClass cls, int n, int kappa_min, int jobs) {
    int floor = generation_floor(cls, kappa_min);
    if (n < floor) return {};
    LevelRule rule{cls, n, kappa_min};
    std::vector<Code> level;
    int h = floor;
    if (cls == PlaneClass::triangulation)
        level = {canonical_code(PlaneGraph::from_rotation(
            kappa_min >= 4 ? double_apex_rotation(4, true) : k4_rotation()))};
    else
        level = {canonical_code(PlaneGraph::from_rotation(c4_rotation()))};
    auto prune = [&](std::vector<Code>& lv) {
        std::erase_if(lv, [&](const Code& c) { return !accept_child(rule, graph_from_code(c).rotation()); });
    };
    prune(level);
    while (h < n) {
        level = expand_level(level, rule, jobs);
        ++h;
        if (cls == PlaneClass::triangulation && kappa_min >= 4) {
            // double wheels as extra seeds
            Rotation dw = double_apex_rotation(h - 2, true);
            if (accept_child(rule, dw)) {
                Code c = canonical_code(PlaneGraph::from_rotation(dw));
                auto it = std::lower_bound(level.begin(), level.end(), c);
                if (it == level.end() || *it != c) level.insert(it, c);
            }
        }
    }
    return level;
}

} // namespace detail

// Graphs of the class with the given order and vertex connectivity at least
// kappa_min, one per isomorphism class (mirror images identified), in
// canonical-code order.
inline std::vector<Code> generate_codes(PlaneClass cls, int n, int kappa_min, const GenerateOptions& opt = {}) {
    if (n < 4) throw Error(Errc::OrderOutOfDomain, "generation needs n >= 4");
    if (n > 64) throw Error(Errc::OrderOutOfDomain, "generation supports n <= 64");
    auto codes = detail::candidate_codes(cls, n, kappa_min, opt.jobs);
    int base = cls == PlaneClass::triangulation ? 3 : 2;
    if (kappa_min > base) {
        std::vector<char> keep(codes.size(), 0);
        detail::parallel_for(codes.size(), opt.jobs, [&](std::size_t i, int) {
            keep[i] = vertex_connectivity(graph_from_code(codes[i])).kappa >= kappa_min;
        });
        std::vector<Code> out;
        for (std::size_t i = 0; i < codes.size(); ++i)
            if (keep[i]) out.push_back(std::move(codes[i]));
        codes.swap(out);
    }
    return codes;
}

inline void for_each_graph(PlaneClass cls, int n, int kappa_min,
                           const std::function<void(const PlaneGraph&)>& sink, const GenerateOptions& opt = {}) {
    for (const auto& c : generate_codes(cls, n, kappa_min, opt)) sink(graph_from_code(c));
}

inline std::vector<PlaneGraph> generate_all(PlaneClass cls, int n, const GenerateOptions& opt = {}) {
    std::vector<PlaneGraph> out;
    for_each_graph(cls, n, cls == PlaneClass::triangulation ? 3 : 2,
                   [&](const PlaneGraph& g) { out.push_back(g); }, opt);
    return out;
}

struct ExtremalRecord {
    int order = 0;
    PlaneClass cls = PlaneClass::triangulation;
    int kappa = 0;
    std::optional<std::int64_t> max_wiener;
    std::int64_t wiener_count = 0;
    std::optional<std::int64_t> max_transmission;
    std::int64_t transmission_count = 0;
    std::int64_t total_classes = 0;
};

namespace detail {

inline void fold(std::optional<std::int64_t>& best, std::int64_t& count, std::int64_t value, std::int64_t k) {
    if (!best || value > *best) { best = value; count = k; }
    else if (value == *best) count += k;
}

inline void merge_record(ExtremalRecord& into, const ExtremalRecord& r) {
    if (r.max_wiener) fold(into.max_wiener, into.wiener_count, *r.max_wiener, r.wiener_count);
    if (r.max_transmission) fold(into.max_transmission, into.transmission_count, *r.max_transmission, r.transmission_count);
    into.total_classes += r.total_classes;
}

} // namespace detail

inline ExtremalRecord extremal_scan(PlaneClass cls, int kappa_min, int n, const GenerateOptions& opt = {}) {
    ExtremalRecord rec;
    rec.order = n;
    rec.cls = cls;
    rec.kappa = kappa_min;
    auto codes = generate_codes(cls, n, kappa_min, opt);
    int w = detail::worker_count(opt.jobs);
    std::vector<ExtremalRecord> part(w);
    detail::parallel_for(codes.size(), opt.jobs, [&](std::size_t i, int t) {
        auto s = distance_summary(graph_from_code(codes[i]));
        ExtremalRecord one;
        one.max_wiener = s.wiener;
        one.wiener_count = 1;
        one.max_transmission = s.max_transmission;
        one.transmission_count = 1;
        one.total_classes = 1;
        detail::merge_record(part[t], one);
    });
    for (const auto& p : part) detail::merge_record(rec, p);
    return rec;
}

// ---- structural audits ----

enum class AuditStatus { passed, failed, skipped };

struct AuditWitness {
    std::string check; // face_sharing, tri5_last_layer or quad3_last_layer
    int vertex = 0;
    int layer = 0;
};

struct AuditReport {
    AuditStatus face_sharing = AuditStatus::skipped;
    AuditStatus tri5_last_layer = AuditStatus::skipped;
    AuditStatus quad3_last_layer = AuditStatus::skipped;
    std::vector<AuditWitness> witnesses;

    bool ok() const {
        return face_sharing != AuditStatus::failed && tri5_last_layer != AuditStatus::failed &&
               quad3_last_layer != AuditStatus::failed;
    }
};

namespace detail {

inline std::vector<std::vector<int>> bfs_layers(const PlaneGraph& g, int v, std::vector<int>& dist) {
    std::vector<int> queue;
    bfs(g, v, dist, queue);
    std::vector<std::vector<int>> layers;
    for (int x : queue) {
        if (dist[x] >= static_cast<int>(layers.size())) layers.emplace_back();
        layers[dist[x]].push_back(x);
    }
    return layers;
}

inline void audit_33(const PlaneGraph& g, std::vector<AuditWitness>& out) {
    int n = g.order();
    std::vector<std::vector<char>> share(n + 1, std::vector<char>(n + 1, 0));
    for (const auto& walk : trace_faces(g))
        for (int a : walk)
            for (int b : walk) share[a][b] = 1;
    std::vector<int> dist;
    for (int v = 1; v <= n; ++v) {
        auto layers = bfs_layers(g, v, dist);
        for (int i = 1; i + 1 < static_cast<int>(layers.size()); ++i) {
            std::vector<int> active;
            for (int x : layers[i])
                for (int u : g.neighbors(x))
                    if (dist[u] == i + 1) { active.push_back(x); break; }
            for (int x : active) {
                int partners = 0;
                for (int y : active)
                    if (y != x && share[x][y]) ++partners;
                if (partners < 2) out.push_back({"face_sharing", v, i});
            }
        }
    }
}

inline void audit_34(const PlaneGraph& g, bool triangulation, std::vector<AuditWitness>& out) {
    for (int v = 1; v <= g.order(); ++v) {
        auto p = distance_profile(g, v);
        int d = p.eccentricity();
        const auto& L = p.layers;
        if (d < 1) continue;
        if (triangulation) {
            if (L[d - 1] == 5 && L[d] != 1) out.push_back({"tri5_last_layer", v, d});
        } else {
            if (L[d - 1] == 3 && L[d] != 1) out.push_back({"quad3_last_layer", v, d});
            if (d >= 2 && L[d - 2] == 3 && L[d - 1] == 4 && L[d] <= 1) out.push_back({"quad3_last_layer", v, d});
        }
    }
}

} // namespace detail

// Each throws HypothesisNotMet when g is outside the class the check applies to; otherwise
// returns the offending (vertex, layer) pairs.
inline std::vector<AuditWitness> audit_face_sharing(const PlaneGraph& g, std::optional<int> kappa = {}) {
    if (!g.is_simple()) throw Error(Errc::HypothesisNotMet, "graph not simple");
    int k = kappa ? *kappa : vertex_connectivity(g).kappa;
    if (k < 3) throw Error(Errc::HypothesisNotMet, "graph not 3-connected");
    std::vector<AuditWitness> w;
    detail::audit_33(g, w);
    return w;
}

inline std::vector<AuditWitness> audit_tri5_last_layer(const PlaneGraph& g, std::optional<int> kappa = {}) {
    auto c = classify(g);
    if (!c.is_simple || !c.is_triangulation) throw Error(Errc::HypothesisNotMet, "not a simple triangulation");
    int k = kappa ? *kappa : vertex_connectivity(g).kappa;
    if (k < 5) throw Error(Errc::HypothesisNotMet, "triangulation not 5-connected");
    std::vector<AuditWitness> w;
    detail::audit_34(g, true, w);
    return w;
}

inline std::vector<AuditWitness> audit_quad3_last_layer(const PlaneGraph& g, std::optional<int> kappa = {}) {
    auto c = classify(g);
    if (!c.is_simple || !c.is_quadrangulation) throw Error(Errc::HypothesisNotMet, "not a simple quadrangulation");
    int k = kappa ? *kappa : vertex_connectivity(g).kappa;
    if (k < 3) throw Error(Errc::HypothesisNotMet, "quadrangulation not 3-connected");
    std::vector<AuditWitness> w;
    detail::audit_34(g, false, w);
    return w;
}

inline AuditReport lemma_audit(const PlaneGraph& g) {
    AuditReport rep;
    int kappa = vertex_connectivity(g).kappa;
    auto run = [&](AuditStatus& status, auto&& fn) {
        try {
            auto w = fn(g, kappa);
            status = w.empty() ? AuditStatus::passed : AuditStatus::failed;
            rep.witnesses.insert(rep.witnesses.end(), w.begin(), w.end());
        } catch (const Error& e) {
            if (e.code() != Errc::HypothesisNotMet) throw;
            status = AuditStatus::skipped;
        }
    };
    run(rep.face_sharing, audit_face_sharing);
    run(rep.tri5_last_layer, audit_tri5_last_layer);
    run(rep.quad3_last_layer, audit_quad3_last_layer);
    return rep;
}

} // namespace pw
