#include "bucolic/recognition.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace bucolic {

namespace {

bool has_common_neighbor_at(const graph& g, int v, int w, const std::vector<int>& from_u,
                            int dist) {
    for (int x : g.common_neighbors(v, w))
        if (from_u[x] == dist) return true;
    return false;
}

}  // namespace

std::optional<condition_witness> triangle_condition(const graph& g, int u) {
    g.check_vertex(u);
    const auto& from_u = g.distances_from(u);
    for (auto [v, w] : g.edges()) {
        int k = from_u[v];
        if (k < 1 || k != from_u[w]) continue;
        if (!has_common_neighbor_at(g, v, w, from_u, k - 1))
            return condition_witness{"triangle", u, v, w, -1};
    }
    return std::nullopt;
}

std::optional<condition_witness> quadrangle_condition(const graph& g, int u) {
    g.check_vertex(u);
    const auto& from_u = g.distances_from(u);
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (from_u[v] < 1) continue;
        for (int w = v + 1; w < n; ++w) {
            int k = from_u[v];
            if (from_u[w] != k || g.distance(v, w) != 2) continue;
            int z = -1;
            for (int c : g.common_neighbors(v, w))
                if (from_u[c] == k + 1) {
                    z = c;
                    break;
                }
            if (z < 0) continue;
            if (!has_common_neighbor_at(g, v, w, from_u, k - 1))
                return condition_witness{"quadrangle", u, v, w, z};
        }
    }
    return std::nullopt;
}

bool replay_condition_witness(const graph& g, const condition_witness& cw) {
    g.check_vertex(cw.u);
    g.check_vertex(cw.v);
    g.check_vertex(cw.w);
    const auto& from_u = g.distances_from(cw.u);
    int k = from_u[cw.v];
    if (k < 1 || from_u[cw.w] != k) return false;
    if (cw.condition == "triangle") {
        if (!g.adjacent(cw.v, cw.w)) return false;
    } else if (cw.condition == "quadrangle") {
        g.check_vertex(cw.z);
        if (g.distance(cw.v, cw.w) != 2) return false;
        if (!g.adjacent(cw.z, cw.v) || !g.adjacent(cw.z, cw.w)) return false;
        if (from_u[cw.z] != k + 1) return false;
    } else {
        return false;
    }
    return !has_common_neighbor_at(g, cw.v, cw.w, from_u, k - 1);
}

std::optional<condition_witness> weak_modularity_witness(const graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (auto cw = triangle_condition(g, u)) return cw;
        if (auto cw = quadrangle_condition(g, u)) return cw;
    }
    return std::nullopt;
}

bool is_weakly_modular(const graph& g) { return !weak_modularity_witness(g).has_value(); }

bool replay_certificate(const graph& g, const certificate& c) {
    if (c.type == certificate::kind::condition) return replay_condition_witness(g, c.witness);
    if (c.vertices.empty()) return false;
    return is_isomorphic(g.induced(c.vertices), pattern_graph(c.pat));
}

std::string describe(const graph& g, const certificate& c) {
    std::ostringstream out;
    if (c.type == certificate::kind::condition) {
        const auto& cw = c.witness;
        out << cw.condition << " condition fails at basepoint " << g.label(cw.u) << " for pair {"
            << g.label(cw.v) << "," << g.label(cw.w) << "}";
        if (cw.z >= 0) out << " with middle vertex " << g.label(cw.z);
    } else {
        out << "induced " << to_string(c.pat) << " on {";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) out << ",";
            out << g.label(c.vertices[i]);
        }
        out << "}";
    }
    return out.str();
}

const char* to_string(graph_class cls) {
    switch (cls) {
        case graph_class::weakly_modular: return "weakly-modular";
        case graph_class::pre_median: return "pre-median";
        case graph_class::bucolic: return "bucolic";
        case graph_class::strongly_bucolic: return "strongly-bucolic";
        case graph_class::bridged: return "bridged";
        case graph_class::weakly_bridged: return "weakly-bridged";
    }
    return "?";
}

namespace {

std::vector<pattern> forbidden_patterns(graph_class cls) {
    switch (cls) {
        case graph_class::weakly_modular: return {};
        case graph_class::pre_median: return {pattern::k23, pattern::almost_w4};
        case graph_class::bucolic: return {pattern::k23, pattern::w4, pattern::almost_w4};
        case graph_class::strongly_bucolic:
            return {pattern::k23, pattern::w4, pattern::almost_w4, pattern::w5};
        case graph_class::bridged: return {pattern::c4, pattern::c5};
        case graph_class::weakly_bridged: return {pattern::c4};
    }
    return {};
}

void append_pattern_certs(const graph& g, pattern p, bool exhaustive,
                          std::vector<certificate>& out) {
    auto hits = find_induced(g, pattern_graph(p), !exhaustive);
    for (auto& set : hits) {
        certificate c;
        c.type = certificate::kind::forbidden_pattern;
        c.pat = p;
        c.vertices = std::move(set);
        out.push_back(std::move(c));
    }
}

}  // namespace

check_result check_class(const graph& g, graph_class cls, bool exhaustive) {
    check_result out;
    if (auto cw = weak_modularity_witness(g)) {
        certificate c;
        c.type = certificate::kind::condition;
        c.witness = *cw;
        out.certificates.push_back(std::move(c));
        if (!exhaustive) return out;
    }
    for (pattern p : forbidden_patterns(cls))
        append_pattern_certs(g, p, exhaustive, out.certificates);
    out.member = out.certificates.empty();
    return out;
}

class_report classify(const graph& g, bool exhaustive) {
    class_report rep;
    auto clock = [start = std::chrono::steady_clock::now()]() mutable {
        auto now = std::chrono::steady_clock::now();
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - start).count();
        start = now;
        return static_cast<long long>(us);
    };

    bool wm = true;
    if (auto cw = weak_modularity_witness(g)) {
        wm = false;
        certificate c;
        c.type = certificate::kind::condition;
        c.witness = *cw;
        rep.certificates.push_back(std::move(c));
    }
    rep.stage_micros.emplace_back("weak-modularity", clock());

    bool seen[13] = {};
    auto absent = [&](pattern p) {
        std::vector<certificate> certs;
        append_pattern_certs(g, p, exhaustive, certs);
        bool none = certs.empty();
        if (!seen[static_cast<int>(p)]) {
            seen[static_cast<int>(p)] = true;
            for (auto& c : certs) rep.certificates.push_back(std::move(c));
            rep.stage_micros.emplace_back(std::string("pattern-") + to_string(p), clock());
        }
        return none;
    };

    bool no_c4 = absent(pattern::c4);
    bool no_c5 = absent(pattern::c5);
    bool no_k23 = absent(pattern::k23);
    bool no_w4 = absent(pattern::w4);
    bool no_aw4 = absent(pattern::almost_w4);
    bool no_w5 = absent(pattern::w5);

    rep.weakly_modular = wm;
    rep.bridged = wm && no_c4 && no_c5;
    rep.weakly_bridged = wm && no_c4;
    rep.pre_median = wm && no_k23 && no_aw4;
    rep.bucolic = wm && no_k23 && no_w4 && no_aw4;
    rep.strongly_bucolic = rep.bucolic && no_w5;
    return rep;
}

bool is_bucolic(const graph& g) { return check_class(g, graph_class::bucolic).member; }
bool is_bridged(const graph& g) { return check_class(g, graph_class::bridged).member; }
bool is_weakly_bridged(const graph& g) {
    return check_class(g, graph_class::weakly_bridged).member;
}

}  // namespace bucolic
