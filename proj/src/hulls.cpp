#include "bucolic/hulls.hpp"

#include <algorithm>

namespace bucolic {

namespace {

std::vector<int> normalized_set(const graph& g, std::vector<int> set) {
    if (set.empty()) fail(error_code::invalid_argument, "vertex set must be nonempty");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int v : set) g.check_vertex(v);
    const auto& row = g.distances_from(set.front());
    for (int v : set)
        if (row[v] < 0)
            fail(error_code::precondition, "vertex set spans multiple components");
    return set;
}

std::vector<char> membership(const graph& g, const std::vector<int>& set) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : set) in[v] = 1;
    return in;
}

}  // namespace

bool is_convex(const graph& g, const std::vector<int>& set) {
    auto s = normalized_set(g, set);
    auto in = membership(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (int x : g.interval(s[i], s[j]))
                if (!in[x]) return false;
    return true;
}

std::optional<int> gate(const graph& g, const std::vector<int>& set, int x) {
    auto s = normalized_set(g, set);
    g.check_vertex(x);
    if (g.distance(x, s.front()) < 0) return std::nullopt;
    std::optional<int> found;
    const auto& from_x = g.distances_from(x);
    for (int cand : s) {
        const auto& from_cand = g.distances_from(cand);
        bool ok = true;
        for (int y : s)
            if (from_x[cand] + from_cand[y] != from_x[y]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (found) fail(error_code::internal, "two distinct gates for one vertex");
        found = cand;
    }
    return found;
}

bool is_gated(const graph& g, const std::vector<int>& set) {
    auto s = normalized_set(g, set);
    auto in = membership(g, s);
    const auto& row = g.distances_from(s.front());
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (in[x] || row[x] < 0) continue;
        if (!gate(g, s, x)) return false;
    }
    return true;
}

namespace {

hull_result run_closure(const graph& g, const std::vector<int>& seed, hull_kind kind) {
    auto s = normalized_set(g, seed);
    hull_result out;
    out.kind = kind;
    out.rounds.push_back(s);
    auto in = membership(g, s);
    std::vector<int> current = s;
    for (;;) {
        std::vector<int> added;
        auto add = [&](int x) {
            if (!in[x]) {
                in[x] = 1;
                added.push_back(x);
            }
        };
        if (kind == hull_kind::triangle_gated) {
            for (int x = 0; x < g.vertex_count(); ++x) {
                if (in[x]) continue;
                int inside = 0;
                for (int y : g.neighbors(x)) inside += in[y];
                if (inside >= 2) add(x);
            }
        } else {
            for (std::size_t i = 0; i < current.size(); ++i)
                for (std::size_t j = i + 1; j < current.size(); ++j) {
                    int u = current[i], v = current[j];
                    for (int x : g.interval(u, v)) add(x);
                    if (kind == hull_kind::gated && g.distance(u, v) <= 2)
                        for (int x : g.common_neighbors(u, v)) add(x);
                }
        }
        if (added.empty()) break;
        std::sort(added.begin(), added.end());
        out.rounds.push_back(added);
        current.insert(current.end(), added.begin(), added.end());
        std::sort(current.begin(), current.end());
    }
    out.vertices = current;
    return out;
}

void require_triangle(const graph& g, const std::vector<int>& t) {
    auto s = normalized_set(g, t);
    if (s.size() != 3 || !g.adjacent(s[0], s[1]) || !g.adjacent(s[0], s[2]) ||
        !g.adjacent(s[1], s[2]))
        fail(error_code::precondition, "seed is not a triangle");
}

}  // namespace

hull_result convex_hull(const graph& g, const std::vector<int>& seed) {
    return run_closure(g, seed, hull_kind::convex);
}

hull_result gated_hull(const graph& g, const std::vector<int>& seed) {
    hull_result out = run_closure(g, seed, hull_kind::gated);
    if (!is_gated(g, out.vertices))
        fail(error_code::internal, "gated closure reached a non-gated fixpoint");
    return out;
}

hull_result gated_hull_of_triangle(const graph& g, const std::vector<int>& triangle) {
    require_triangle(g, triangle);
    return run_closure(g, triangle, hull_kind::triangle_gated);
}

bool replay_hull(const graph& g, const hull_result& result) {
    if (result.rounds.empty()) return false;
    hull_result again = result.kind == hull_kind::triangle_gated
                            ? gated_hull_of_triangle(g, result.rounds.front())
                            : run_closure(g, result.rounds.front(), result.kind);
    return again.rounds == result.rounds && again.vertices == result.vertices;
}

std::vector<std::vector<int>> fibers(const graph& g, const std::vector<int>& set) {
    auto s = normalized_set(g, set);
    if (!g.is_connected()) fail(error_code::precondition, "fibers require a connected graph");
    if (!is_gated(g, s)) fail(error_code::precondition, "fibers require a gated set");
    std::vector<std::vector<int>> out(s.size());
    for (int x = 0; x < g.vertex_count(); ++x) {
        auto gx = gate(g, s, x);
        if (!gx) fail(error_code::internal, "gated set left a vertex without a gate");
        auto it = std::lower_bound(s.begin(), s.end(), *gx);
        out[it - s.begin()].push_back(x);
    }
    return out;
}

bool is_fiber_complemented(const graph& g, int bound) {
    int n = g.vertex_count();
    if (bound < 1 || bound > 24) fail(error_code::invalid_argument, "bound out of range [1,24]");
    if (n > bound)
        fail(error_code::bound_exceeded,
             "bounded check refused: graph has " + std::to_string(n) +
                 " vertices, bound is " + std::to_string(bound));
    if (!g.is_connected())
        fail(error_code::precondition, "fiber complementation requires a connected graph");
    if (n == 0) return true;

    // interval_mask[u*n+v] holds I(u,v); gate_mask[x*n+c] holds the vertices y
    // with d(x,y) = d(x,c) + d(c,y), i.e. those for which c lies on a
    // shortest x-y path.
    std::vector<std::uint64_t> interval_mask(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::uint64_t> gate_mask(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        const auto& row_u = g.distances_from(u);
        for (int c = 0; c < n; ++c) {
            const auto& row_c = g.distances_from(c);
            std::uint64_t m = 0;
            for (int y = 0; y < n; ++y)
                if (row_u[y] == row_u[c] + row_c[y]) m |= std::uint64_t{1} << y;
            gate_mask[static_cast<std::size_t>(u) * n + c] = m;
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t m = 0;
            const auto& row_v = g.distances_from(v);
            for (int x = 0; x < n; ++x)
                if (row_u[x] + row_v[x] == row_u[v]) m |= std::uint64_t{1} << x;
            interval_mask[static_cast<std::size_t>(u) * n + v] = m;
        }
    }
    auto is_convex_mask = [&](std::uint64_t s) {
        for (int u = 0; u < n; ++u) {
            if (!((s >> u) & 1)) continue;
            for (int v = u + 1; v < n; ++v)
                if (((s >> v) & 1) &&
                    (interval_mask[static_cast<std::size_t>(u) * n + v] & ~s))
                    return false;
        }
        return true;
    };
    auto gate_of = [&](std::uint64_t s, int x) -> int {
        for (int c = 0; c < n; ++c)
            if (((s >> c) & 1) && !(s & ~gate_mask[static_cast<std::size_t>(x) * n + c]))
                return c;
        return -1;
    };
    auto is_gated_mask = [&](std::uint64_t s) {
        for (int x = 0; x < n; ++x)
            if (!((s >> x) & 1) && gate_of(s, x) < 0) return false;
        return true;
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s <= all; ++s) {
        if (!is_convex_mask(s) || !is_gated_mask(s)) continue;
        std::vector<std::uint64_t> fiber(n, 0);
        for (int x = 0; x < n; ++x) {
            int c = ((s >> x) & 1) ? x : gate_of(s, x);
            fiber[c] |= std::uint64_t{1} << x;
        }
        for (int c = 0; c < n; ++c)
            if (((s >> c) & 1) && !is_gated_mask(fiber[c])) return false;
    }
    return true;
}

}  // namespace bucolic
