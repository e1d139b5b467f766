#include "bucolic/patterns.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bucolic {

const char* to_string(pattern p) {
    switch (p) {
        case pattern::k23: return "K23";
        case pattern::c4: return "C4";
        case pattern::c5: return "C5";
        case pattern::w4: return "W4";
        case pattern::w5: return "W5";
        case pattern::almost_w4: return "W4-";
        case pattern::extended_w5: return "extended-W5";
        case pattern::house: return "house";
        case pattern::twin_house: return "twin-house";
        case pattern::double_house: return "double-house";
        case pattern::cogwheel: return "cogwheel";
        case pattern::prism: return "prism";
        case pattern::double_prism: return "double-prism";
    }
    return "?";
}

graph pattern_graph(pattern p) {
    switch (p) {
        case pattern::k23:
            return complete_bipartite_graph(2, 3);
        case pattern::c4:
            return cycle_graph(4);
        case pattern::c5:
            return cycle_graph(5);
        case pattern::w4:
            return wheel_graph(4);
        case pattern::w5:
            return wheel_graph(5);
        case pattern::almost_w4:
            return almost_wheel_graph(4);
        case pattern::extended_w5:
            // Rim 0..4, hub 5, pendant-ish vertex 6 on the rim edge {0,1}.
            return graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                             {6, 0}, {6, 1}});
        case pattern::house:
            // Square 0-1-2-3, apex 4 over the edge {0,1}.
            return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
        case pattern::twin_house:
            // Shared triangle edge {1,2}; squares 0-1-4-3 and 0-1-6-5,
            // triangles 1-2-4 and 1-2-6.
            return graph(7, {{0, 1}, {1, 4}, {3, 4}, {0, 3}, {1, 6}, {5, 6},
                             {0, 5}, {1, 2}, {2, 4}, {2, 6}});
        case pattern::double_house:
            // Triangle 0-1-2 with squares 3-4-1-0 and 3-0-2-5.
            return graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {1, 4}, {0, 3}, {2, 5}, {3, 5}});
        case pattern::cogwheel:
            // Center 0; squares (0,1,4,2), (0,2,5,3), (0,3,6,1).
            return graph(7, {{0, 1}, {1, 4}, {2, 4}, {0, 2}, {2, 5}, {3, 5},
                             {0, 3}, {3, 6}, {1, 6}});
        case pattern::prism:
            return cartesian_product(complete_graph(3), complete_graph(2));
        case pattern::double_prism:
            // Two prisms sharing the square 0-3-5-2 (vertices 0..5 form the
            // first prism, 6 and 7 complete the second).
            return graph(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                             {0, 3}, {1, 4}, {2, 5}, {0, 6}, {2, 6}, {3, 7},
                             {5, 7}, {6, 7}});
    }
    fail(error_code::invalid_argument, "unknown pattern");
}

namespace {

// Pattern vertices in a connected search order: each vertex after the first
// is adjacent to an earlier one (all reference patterns are connected).
std::vector<int> search_order(const graph& pat) {
    int n = pat.vertex_count();
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (pat.degree(v) > pat.degree(start)) start = v;
    std::vector<int> order{start};
    std::vector<char> used(n, 0);
    used[start] = 1;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int links = 0;
            for (int w : pat.neighbors(v)) links += used[w];
            if (links > best_links || (links == best_links && best >= 0 &&
                                       pat.degree(v) > pat.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        used[best] = 1;
    }
    return order;
}

struct induced_searcher {
    const graph& host;
    const graph& pat;
    std::vector<int> order;          // pattern vertices in assignment order
    std::vector<int> assignment;     // pattern vertex -> host vertex
    std::vector<char> host_used;
    std::vector<std::vector<int>> hits;
    bool first_only = false;
    bool done = false;

    induced_searcher(const graph& host_, const graph& pat_, bool first_only_)
        : host(host_), pat(pat_), order(search_order(pat_)),
          assignment(pat_.vertex_count(), -1),
          host_used(host_.vertex_count(), 0), first_only(first_only_) {}

    bool feasible(int pv, int hv) {
        if (host.degree(hv) < pat.degree(pv)) return false;
        for (int prev : order) {
            if (prev == pv) break;
            bool want = pat.adjacent(pv, prev);
            if (host.adjacent(hv, assignment[prev]) != want) return false;
        }
        return true;
    }

    void extend(std::size_t idx) {
        if (done) return;
        if (idx == order.size()) {
            std::vector<int> set(assignment.begin(), assignment.end());
            std::sort(set.begin(), set.end());
            hits.push_back(std::move(set));
            if (first_only) done = true;
            return;
        }
        int pv = order[idx];
        // Candidates: neighbors of an already-placed pattern neighbor when one
        // exists, otherwise every unused host vertex.
        int anchor = -1;
        for (int prev : order) {
            if (prev == pv) break;
            if (pat.adjacent(pv, prev)) {
                anchor = assignment[prev];
                break;
            }
        }
        auto try_host = [&](int hv) {
            if (done || host_used[hv] || !feasible(pv, hv)) return;
            host_used[hv] = 1;
            assignment[pv] = hv;
            extend(idx + 1);
            assignment[pv] = -1;
            host_used[hv] = 0;
        };
        if (anchor >= 0)
            for (int hv : host.neighbors(anchor)) try_host(hv);
        else
            for (int hv = 0; hv < host.vertex_count(); ++hv) try_host(hv);
    }
};

}  // namespace

std::vector<std::vector<int>> find_induced(const graph& host, const graph& pat,
                                           bool first_only) {
    if (pat.vertex_count() == 0 || pat.vertex_count() > host.vertex_count()) return {};
    induced_searcher s(host, pat, first_only);
    s.extend(0);
    std::sort(s.hits.begin(), s.hits.end());
    s.hits.erase(std::unique(s.hits.begin(), s.hits.end()), s.hits.end());
    return s.hits;
}

std::optional<std::vector<int>> find_induced_embedding(const graph& host, const graph& pat) {
    if (pat.vertex_count() == 0 || pat.vertex_count() > host.vertex_count())
        return std::nullopt;
    induced_searcher s(host, pat, true);
    s.extend(0);
    if (s.hits.empty()) return std::nullopt;
    // Recover an ordered embedding on the found set by matching within it.
    std::vector<int> set = s.hits.front();
    graph sub = host.induced(set);
    auto iso = isomorphism(pat, sub);
    if (!iso) fail(error_code::internal, "induced hit without an embedding");
    std::vector<int> out(pat.vertex_count());
    for (int pv = 0; pv < pat.vertex_count(); ++pv) out[pv] = set[(*iso)[pv]];
    return out;
}

bool contains_induced(const graph& host, pattern p) {
    return !find_induced(host, pattern_graph(p), true).empty();
}

namespace {

// Iterated neighbor-color refinement; returns a stable coloring usable as an
// isomorphism invariant.
std::vector<int> refine_colors(const graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        // Rank signatures in sorted order so ids are label-invariant.
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        for (int v = 0; v < n; ++v) next_id.emplace(sig[v], 0);
        int rank = 0;
        for (auto& kv : next_id) kv.second = rank++;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = next_id[sig[v]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend_iso(const graph& a, const graph& b, const std::vector<int>& order,
                std::vector<int>& map_ab, std::vector<char>& used,
                const std::vector<int>& ca, const std::vector<int>& cb, std::size_t idx) {
    if (idx == order.size()) return true;
    int va = order[idx];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
        if (used[vb] || ca[va] != cb[vb]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < idx && ok; ++j)
            if (a.adjacent(va, order[j]) != b.adjacent(vb, map_ab[order[j]])) ok = false;
        if (!ok) continue;
        used[vb] = 1;
        map_ab[va] = vb;
        if (extend_iso(a, b, order, map_ab, used, ca, cb, idx + 1)) return true;
        used[vb] = 0;
        map_ab[va] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const graph& a, const graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    int n = a.vertex_count();
    if (n == 0) return std::vector<int>{};
    std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
    auto histogram = [n](const std::vector<int>& c) {
        std::vector<int> h(c);
        std::sort(h.begin(), h.end());
        return h;
    };
    if (histogram(ca) != histogram(cb)) return std::nullopt;
    // Assign rarest color classes first.
    std::vector<int> class_size(n + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[ca[v]];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        return x < y;
    });
    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    if (extend_iso(a, b, order, map_ab, used, ca, cb, 0)) return map_ab;
    return std::nullopt;
}

bool is_isomorphic(const graph& a, const graph& b) { return isomorphism(a, b).has_value(); }

}  // namespace bucolic
