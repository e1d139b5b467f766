#include "bucolic/complex.hpp"

#include <algorithm>
#include <set>

#include "bucolic/patterns.hpp"

namespace bucolic {

namespace {

std::vector<int> sorted_vec(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset_sorted(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::array<int, 4> triangle_square_complex::canonical_square(std::array<int, 4> cycle) {
    std::array<int, 4> best = cycle;
    std::array<int, 4> fwd = cycle;
    std::array<int, 4> rev = {cycle[0], cycle[3], cycle[2], cycle[1]};
    for (int r = 0; r < 4; ++r) {
        std::array<int, 4> a = {fwd[r % 4], fwd[(r + 1) % 4], fwd[(r + 2) % 4], fwd[(r + 3) % 4]};
        std::array<int, 4> b = {rev[r % 4], rev[(r + 1) % 4], rev[(r + 2) % 4], rev[(r + 3) % 4]};
        if (a < best) best = a;
        if (b < best) best = b;
    }
    return best;
}

triangle_square_complex::triangle_square_complex(graph skeleton,
                                                 std::vector<std::array<int, 3>> triangles,
                                                 std::vector<std::array<int, 4>> squares)
    : skeleton_(std::move(skeleton)) {
    for (auto t : triangles) {
        for (int v : t) skeleton_.check_vertex(v);
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            fail(error_code::invalid_argument, "triangle cell with repeated vertex");
        if (!skeleton_.adjacent(t[0], t[1]) || !skeleton_.adjacent(t[0], t[2]) ||
            !skeleton_.adjacent(t[1], t[2]))
            fail(error_code::invalid_argument, "triangle cell is not a triangle of the skeleton");
        std::sort(t.begin(), t.end());
        triangles_.push_back(t);
    }
    for (auto q : squares) {
        for (int v : q) skeleton_.check_vertex(v);
        std::array<int, 4> s = q;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(error_code::invalid_argument, "square cell with repeated vertex");
        for (int i = 0; i < 4; ++i)
            if (!skeleton_.adjacent(q[i], q[(i + 1) % 4]))
                fail(error_code::invalid_argument, "square cell is not a cycle of the skeleton");
        if (skeleton_.adjacent(q[0], q[2]) || skeleton_.adjacent(q[1], q[3]))
            fail(error_code::invalid_argument, "square cell has a chord in the skeleton");
        squares_.push_back(canonical_square(q));
    }
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
    std::sort(squares_.begin(), squares_.end());
    squares_.erase(std::unique(squares_.begin(), squares_.end()), squares_.end());
}

bool triangle_square_complex::has_triangle(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

bool triangle_square_complex::has_square(int a, int b, int c, int d) const {
    auto s = canonical_square({a, b, c, d});
    return std::binary_search(squares_.begin(), squares_.end(), s);
}

triangle_square_complex flag_complex(const graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (auto [u, v] : g.edges())
        for (int w : g.common_neighbors(u, v))
            if (w > v) tris.push_back({u, v, w});
    std::vector<std::array<int, 4>> sqs;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) continue;
            auto mids = g.common_neighbors(a, c);
            for (size_t i = 0; i < mids.size(); ++i) {
                for (size_t j = i + 1; j < mids.size(); ++j) {
                    int b = mids[i], d = mids[j];
                    if (g.adjacent(b, d)) continue;
                    // a,c is the lexicographically first diagonal exactly once.
                    if (std::min(b, d) < a) continue;
                    sqs.push_back(triangle_square_complex::canonical_square({a, b, c, d}));
                }
            }
        }
    }
    return triangle_square_complex(g, std::move(tris), std::move(sqs));
}

flag_report is_flag(const triangle_square_complex& x) {
    triangle_square_complex full = flag_complex(x.skeleton());
    flag_report rep;
    std::set_difference(full.triangles().begin(), full.triangles().end(), x.triangles().begin(),
                        x.triangles().end(), std::back_inserter(rep.missing_triangles));
    std::set_difference(x.triangles().begin(), x.triangles().end(), full.triangles().begin(),
                        full.triangles().end(), std::back_inserter(rep.extra_triangles));
    std::set_difference(full.squares().begin(), full.squares().end(), x.squares().begin(),
                        x.squares().end(), std::back_inserter(rep.missing_squares));
    std::set_difference(x.squares().begin(), x.squares().end(), full.squares().begin(),
                        full.squares().end(), std::back_inserter(rep.extra_squares));
    rep.flag = rep.missing_triangles.empty() && rep.extra_triangles.empty() &&
               rep.missing_squares.empty() && rep.extra_squares.empty();
    return rep;
}

std::vector<cell_overlap> validate_cells(const triangle_square_complex& x) {
    // Cells in cyclic order for squares; membership tested on sorted copies.
    struct cell {
        std::vector<int> cyc;     // as stored
        std::vector<int> sorted;  // for intersections
        bool square;
    };
    std::vector<cell> cells;
    for (const auto& t : x.triangles())
        cells.push_back({{t[0], t[1], t[2]}, {t[0], t[1], t[2]}, false});
    for (const auto& q : x.squares())
        cells.push_back({{q[0], q[1], q[2], q[3]}, sorted_vec({q[0], q[1], q[2], q[3]}), true});

    auto edge_of = [](const cell& c, int p, int q) {
        if (!c.square) return true;  // any pair inside a triangle spans an edge of it
        for (int i = 0; i < 4; ++i) {
            int a = c.cyc[i], b = c.cyc[(i + 1) % 4];
            if ((a == p && b == q) || (a == q && b == p)) return true;
        }
        return false;
    };

    std::vector<cell_overlap> bad;
    for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t j = i + 1; j < cells.size(); ++j) {
            auto shared = intersect_sorted(cells[i].sorted, cells[j].sorted);
            if (shared.size() <= 1) continue;
            bool ok = shared.size() == 2 && x.skeleton().adjacent(shared[0], shared[1]) &&
                      edge_of(cells[i], shared[0], shared[1]) &&
                      edge_of(cells[j], shared[0], shared[1]);
            if (!ok) bad.push_back({cells[i].cyc, cells[j].cyc});
        }
    }
    return bad;
}

condition_check cube_condition(const triangle_square_complex& x) {
    const graph& g = x.skeleton();
    std::vector<std::vector<int>> sq;
    for (const auto& q : x.squares()) sq.push_back(sorted_vec({q[0], q[1], q[2], q[3]}));

    // A triple qualifies when the pairwise intersections are exactly edges
    // and the joint intersection is exactly one vertex; three squares sharing
    // a single common edge are a legal book and stay out.
    auto share_edge = [&](const std::vector<int>& a, const std::vector<int>& b) {
        auto shared = intersect_sorted(a, b);
        return shared.size() == 2 && g.adjacent(shared[0], shared[1]);
    };

    std::vector<std::vector<int>> cubes;
    bool cubes_ready = false;
    for (size_t a = 0; a < sq.size(); ++a) {
        for (size_t b = a + 1; b < sq.size(); ++b) {
            if (!share_edge(sq[a], sq[b])) continue;
            for (size_t c = b + 1; c < sq.size(); ++c) {
                if (!share_edge(sq[a], sq[c]) || !share_edge(sq[b], sq[c])) continue;
                auto joint = intersect_sorted(intersect_sorted(sq[a], sq[b]), sq[c]);
                if (joint.size() != 1) continue;
                std::vector<int> all;
                for (const auto* s : {&sq[a], &sq[b], &sq[c]})
                    all.insert(all.end(), s->begin(), s->end());
                all = sorted_vec(all);
                all.erase(std::unique(all.begin(), all.end()), all.end());
                if (!cubes_ready) {
                    cubes = find_induced(g, hypercube_graph(3));
                    cubes_ready = true;
                }
                bool inside = false;
                for (const auto& cube : cubes)
                    if (is_subset_sorted(all, cube)) {
                        inside = true;
                        break;
                    }
                if (!inside) {
                    auto tup = [&](size_t i) {
                        const auto& q = x.squares()[i];
                        return std::vector<int>{q[0], q[1], q[2], q[3]};
                    };
                    return {false, complex_witness{"cube", {tup(a), tup(b), tup(c)}}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

condition_check house_condition(const triangle_square_complex& x) {
    const graph& g = x.skeleton();
    for (const auto& t : x.triangles()) {
        std::vector<int> ts = {t[0], t[1], t[2]};
        for (const auto& q : x.squares()) {
            auto qs = sorted_vec({q[0], q[1], q[2], q[3]});
            auto shared = intersect_sorted(ts, qs);
            if (shared.size() != 2) continue;
            int u = shared[0], v = shared[1];
            bool consecutive = false;
            for (int i = 0; i < 4; ++i) {
                int a = q[i], b = q[(i + 1) % 4];
                if ((a == u && b == v) || (a == v && b == u)) consecutive = true;
            }
            if (!consecutive) continue;  // not a shared edge; validate_cells flags it
            int w = -1;
            for (int c : ts)
                if (c != u && c != v) w = c;
            std::vector<int> far;
            for (int c : qs)
                if (c != u && c != v) far.push_back(c);
            int xx = far[0], yy = far[1];
            bool found = false;
            for (int cand = 0; cand < g.vertex_count() && !found; ++cand) {
                if (cand == u || cand == v || cand == w || cand == xx || cand == yy) continue;
                if (g.adjacent(cand, w) && g.adjacent(cand, xx) && g.adjacent(cand, yy) &&
                    !g.adjacent(cand, u) && !g.adjacent(cand, v))
                    found = true;
            }
            if (!found)
                return {false,
                        complex_witness{"house", {ts, {q[0], q[1], q[2], q[3]}}}};
        }
    }
    return {true, std::nullopt};
}

condition_check w4_w5hat_condition(const triangle_square_complex& x) {
    const graph& g = x.skeleton();
    auto w4 = find_induced(g, pattern_graph(pattern::w4), true);
    if (!w4.empty()) return {false, complex_witness{"w4-free", {w4.front()}}};
    for (const auto& occ : find_induced(g, pattern_graph(pattern::extended_w5))) {
        bool dominated = false;
        for (int cand = 0; cand < g.vertex_count() && !dominated; ++cand) {
            bool all = true;
            for (int m : occ)
                if (!g.adjacent(cand, m)) {
                    all = false;
                    break;
                }
            dominated = all;
        }
        if (!dominated) return {false, complex_witness{"extended-w5", {occ}}};
    }
    return {true, std::nullopt};
}

condition_check hypercube_condition_bounded(const graph& g, int kmax, long long work_budget) {
    if (kmax < 2) fail(error_code::invalid_argument, "kmax must be at least 2");
    long long work = 0;
    for (int k = 2; k <= kmax; ++k) {
        auto cubes = find_induced(g, hypercube_graph(k));
        if (cubes.empty()) break;  // no larger cube can exist either
        long long m = static_cast<long long>(cubes.size());
        work += m * m * m / 6 + m;
        if (work > work_budget)
            fail(error_code::budget_exceeded, "hypercube condition work budget exceeded");
        int half = 1 << (k - 1), quarter = 1 << (k - 2);
        graph sub_small = hypercube_graph(k - 1);
        graph sub_tiny = k >= 3 ? hypercube_graph(k - 2) : graph(1, {});
        std::vector<std::vector<int>> bigger = find_induced(g, hypercube_graph(k + 1));
        auto meets_as_cube = [&](const std::vector<int>& a, const std::vector<int>& b,
                                 int want, const graph& shape) {
            auto shared = intersect_sorted(a, b);
            if (static_cast<int>(shared.size()) != want) return false;
            return is_isomorphic(g.induced(shared), shape);
        };
        for (size_t a = 0; a < cubes.size(); ++a) {
            for (size_t b = a + 1; b < cubes.size(); ++b) {
                if (!meets_as_cube(cubes[a], cubes[b], half, sub_small)) continue;
                for (size_t c = b + 1; c < cubes.size(); ++c) {
                    if (!meets_as_cube(cubes[a], cubes[c], half, sub_small)) continue;
                    if (!meets_as_cube(cubes[b], cubes[c], half, sub_small)) continue;
                    auto joint =
                        intersect_sorted(intersect_sorted(cubes[a], cubes[b]), cubes[c]);
                    if (static_cast<int>(joint.size()) != quarter) continue;
                    if (!is_isomorphic(g.induced(joint), sub_tiny)) continue;
                    std::vector<int> all;
                    for (const auto* s : {&cubes[a], &cubes[b], &cubes[c]})
                        all.insert(all.end(), s->begin(), s->end());
                    all = sorted_vec(all);
                    all.erase(std::unique(all.begin(), all.end()), all.end());
                    bool inside = false;
                    for (const auto& big : bigger)
                        if (is_subset_sorted(all, big)) {
                            inside = true;
                            break;
                        }
                    if (!inside)
                        return {false, complex_witness{"hypercube",
                                                       {cubes[a], cubes[b], cubes[c]}}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

void bron_kerbosch(const graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::vector<int> p_copy = p;
    for (int v : p_copy) {
        std::vector<int> np, nx;
        for (int u : p)
            if (g.adjacent(u, v)) np.push_back(u);
        for (int u : x)
            if (g.adjacent(u, v)) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

std::vector<std::vector<int>> maximal_cliques(const graph& g) {
    std::vector<int> r, p, x;
    for (int v = 0; v < g.vertex_count(); ++v) p.push_back(v);
    std::vector<std::vector<int>> out;
    bron_kerbosch(g, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

}  // namespace

condition_check hyperhouse_condition_bounded(const graph& g, long long work_budget) {
    auto cliques = maximal_cliques(g);
    long long work = 0;
    for (int k = 2;; ++k) {
        auto cubes = find_induced(g, hypercube_graph(k));
        if (cubes.empty()) break;
        for (const auto& clique : cliques) {
            if (clique.size() < 3) continue;  // an edge extends inside the cube itself
            graph target = cartesian_product(complete_graph(static_cast<int>(clique.size())),
                                             hypercube_graph(k - 1));
            std::vector<std::vector<int>> prisms;
            bool prisms_ready = false;
            for (const auto& cube : cubes) {
                auto shared = intersect_sorted(clique, cube);
                if (shared.size() != 2) continue;
                if (!g.adjacent(shared[0], shared[1])) continue;
                work += g.vertex_count();
                if (work > work_budget)
                    fail(error_code::budget_exceeded, "hyperhouse condition work budget exceeded");
                std::vector<int> all = clique;
                all.insert(all.end(), cube.begin(), cube.end());
                all = sorted_vec(all);
                all.erase(std::unique(all.begin(), all.end()), all.end());
                if (!prisms_ready) {
                    prisms = target.vertex_count() <= g.vertex_count()
                                 ? find_induced(g, target)
                                 : std::vector<std::vector<int>>{};
                    prisms_ready = true;
                }
                bool inside = false;
                for (const auto& pr : prisms)
                    if (is_subset_sorted(all, pr)) {
                        inside = true;
                        break;
                    }
                if (!inside) return {false, complex_witness{"hyperhouse", {clique, cube}}};
            }
        }
    }
    return {true, std::nullopt};
}

local_conditions_report local_conditions(const triangle_square_complex& x) {
    local_conditions_report rep;
    auto fr = is_flag(x);
    rep.flag = fr.flag;
    if (!fr.flag) {
        complex_witness w{"flag", {}};
        for (const auto& t : fr.missing_triangles) w.tuples.push_back({t[0], t[1], t[2]});
        for (const auto& q : fr.missing_squares) w.tuples.push_back({q[0], q[1], q[2], q[3]});
        for (const auto& t : fr.extra_triangles) w.tuples.push_back({t[0], t[1], t[2]});
        for (const auto& q : fr.extra_squares) w.tuples.push_back({q[0], q[1], q[2], q[3]});
        rep.witnesses.push_back(std::move(w));
    }
    auto overlaps = validate_cells(x);
    rep.well_formed = overlaps.empty();
    for (const auto& o : overlaps)
        rep.witnesses.push_back(complex_witness{"well-formed", {o.cell_a, o.cell_b}});

    const graph& g = x.skeleton();
    auto w4 = find_induced(g, pattern_graph(pattern::w4), true);
    rep.w4_free = w4.empty();
    if (!w4.empty()) rep.witnesses.push_back(complex_witness{"w4-free", {w4.front()}});

    rep.w5hat_ok = true;
    for (const auto& occ : find_induced(g, pattern_graph(pattern::extended_w5))) {
        bool dominated = false;
        for (int cand = 0; cand < g.vertex_count() && !dominated; ++cand) {
            bool all = true;
            for (int m : occ)
                if (!g.adjacent(cand, m)) {
                    all = false;
                    break;
                }
            dominated = all;
        }
        if (!dominated) {
            rep.w5hat_ok = false;
            rep.witnesses.push_back(complex_witness{"extended-w5", {occ}});
            break;
        }
    }

    auto w5 = find_induced(g, pattern_graph(pattern::w5), true);
    rep.w5_free = w5.empty();
    if (!w5.empty()) rep.witnesses.push_back(complex_witness{"w5-free", {w5.front()}});

    auto cc = cube_condition(x);
    rep.cube_ok = cc.ok;
    if (!cc.ok) rep.witnesses.push_back(*cc.witness);
    auto hc = house_condition(x);
    rep.house_ok = hc.ok;
    if (!hc.ok) rep.witnesses.push_back(*hc.witness);
    return rep;
}

const char* to_string(simply_connected_verdict v) {
    switch (v) {
        case simply_connected_verdict::yes: return "yes";
        case simply_connected_verdict::no: return "no";
        case simply_connected_verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

}  // namespace bucolic
