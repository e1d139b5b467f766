#include "bucolic/mooring.hpp"

#include <algorithm>
#include <queue>

namespace bucolic {

void validate_mooring(const graph& g, const mooring& m) {
    g.check_vertex(m.base);
    if (static_cast<int>(m.father.size()) != g.vertex_count())
        fail(error_code::precondition, "father map size does not match the graph");
    const auto& dist = g.distances_from(m.base);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == m.base) {
            if (m.father[v] != v)
                fail(error_code::precondition, "the base must be its own father");
            continue;
        }
        int f = m.father[v];
        if (f < 0 || f >= g.vertex_count() || !g.adjacent(v, f))
            fail(error_code::precondition, "father is not a neighbor");
        if (dist[v] < 0 || dist[f] != dist[v] - 1)
            fail(error_code::precondition, "father is not one step closer to the base");
    }
}

mooring bfs_mooring(const graph& g, int u) {
    g.check_vertex(u);
    if (!g.is_connected()) fail(error_code::precondition, "mooring requires a connected graph");
    mooring m;
    m.base = u;
    m.father.assign(g.vertex_count(), -1);
    m.father[u] = u;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (m.father[w] >= 0) continue;
            m.father[w] = v;
            q.push(w);
        }
    }
    return m;
}

mooring lexbfs_mooring(const graph& g, int u) {
    g.check_vertex(u);
    if (!g.is_connected()) fail(error_code::precondition, "mooring requires a connected graph");
    int n = g.vertex_count();
    // Labels are ascending visit-position lists, compared with missing
    // entries counting as infinity: earlier positions win, and a longer label
    // beats its own prefix.  Quadratic selection is fine at these sizes.
    std::vector<std::vector<int>> label(n);
    std::vector<int> position(n, -1);
    auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
        auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        if (ia != a.end() && ib != b.end()) return *ia < *ib;
        return ia != a.end();  // the longer label wins; equal labels do not
    };
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        if (step == 0) {
            pick = u;
        } else {
            for (int v = 0; v < n; ++v) {
                if (position[v] >= 0) continue;
                if (pick < 0 || better(label[v], label[pick])) pick = v;
            }
        }
        position[pick] = step;
        for (int w : g.neighbors(pick))
            if (position[w] < 0) label[w].push_back(step);
    }
    const auto& dist = g.distances_from(u);
    mooring m;
    m.base = u;
    m.father.assign(n, -1);
    m.father[u] = u;
    for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        int best = -1;
        for (int w : g.neighbors(v))
            if (dist[w] == dist[v] - 1 && (best < 0 || position[w] < position[best])) best = w;
        m.father[v] = best;
    }
    return m;
}

combing_result verify_combing(const graph& g, const mooring& m) {
    validate_mooring(g, m);
    const auto& dist = g.distances_from(m.base);
    for (auto [x, y] : g.edges()) {
        int px = x, py = y;
        if (dist[px] < dist[py]) std::swap(px, py);
        if (dist[px] > dist[py]) px = m.father[px];
        while (px != py) {
            if (!g.adjacent(px, py)) return {false, {x, y}};
            px = m.father[px];
            py = m.father[py];
        }
    }
    return {true, {-1, -1}};
}

std::optional<std::vector<int>> dismantling_order(const graph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> order;
    for (int remaining = n; remaining > 1; --remaining) {
        int victim = -1;
        for (int x = 0; x < n && victim < 0; ++x) {
            if (!alive[x]) continue;
            for (int y = 0; y < n && victim < 0; ++y) {
                if (y == x || !alive[y]) continue;
                bool dominated = g.adjacent(x, y);
                for (int z : g.neighbors(x)) {
                    if (!dominated) break;
                    if (alive[z] && z != y && !g.adjacent(z, y)) dominated = false;
                }
                if (dominated) victim = x;
            }
        }
        if (victim < 0) return std::nullopt;
        alive[victim] = 0;
        order.push_back(victim);
    }
    for (int x = 0; x < n; ++x)
        if (alive[x]) order.push_back(x);
    return order;
}

}  // namespace bucolic
