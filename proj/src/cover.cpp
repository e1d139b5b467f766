#include "bucolic/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bucolic/recognition.hpp"

namespace bucolic {

namespace {

const char* first_failed_condition(const local_conditions_report& rep) {
    if (!rep.flag) return "flag";
    if (!rep.well_formed) return "well-formed";
    if (!rep.w4_free) return "w4-free";
    if (!rep.w5hat_ok) return "extended-w5";
    if (!rep.cube_ok) return "cube";
    if (!rep.house_ok) return "house";
    return nullptr;
}

struct union_find {
    std::vector<int> parent;
    explicit union_find(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

graph rebuild(const cover_state& st) {
    return graph(static_cast<int>(st.vertices.size()), st.edge_list);
}

}  // namespace

cover_state init_cover(const triangle_square_complex& x, int basepoint) {
    x.skeleton().check_vertex(basepoint);
    if (!x.skeleton().is_connected())
        fail(error_code::precondition, "cover construction requires a connected skeleton");
    auto rep = local_conditions(x);
    if (const char* name = first_failed_condition(rep)) {
        fail(error_code::precondition,
             std::string("cover construction requires the local conditions; '") + name +
                 "' fails on this complex");
    }
    cover_state st;
    st.base = x;
    st.basepoint = basepoint;
    st.vertices.push_back({0, basepoint, {}});
    st.level_end.push_back(1);
    const graph& g = x.skeleton();
    for (int z : g.neighbors(basepoint)) {
        int id = static_cast<int>(st.vertices.size());
        st.vertices.push_back({1, z, {{0, z}}});
        st.edge_list.push_back({0, id});
    }
    // The radius-1 cover is the full closed ball, including frontier edges.
    for (int a = 1; a < static_cast<int>(st.vertices.size()); ++a)
        for (int b = a + 1; b < static_cast<int>(st.vertices.size()); ++b)
            if (g.adjacent(st.vertices[a].image, st.vertices[b].image))
                st.edge_list.push_back({a, b});
    st.level_end.push_back(static_cast<int>(st.vertices.size()));
    st.cover = rebuild(st);
    return st;
}

bool extend_cover(cover_state& st) {
    const graph& g = st.base.skeleton();
    const graph& cov = st.cover;
    int top = st.top_level();
    int frontier_begin = st.level_begin(top), frontier_end = st.level_end[top];

    // Couples: frontier vertex plus an uncovered base neighbor of its image.
    std::vector<std::pair<int, int>> couples;
    for (int w = frontier_begin; w < frontier_end; ++w) {
        std::set<int> covered = {st.image_of(w)};
        for (int nb : cov.neighbors(w)) covered.insert(st.image_of(nb));
        for (int z : g.neighbors(st.image_of(w)))
            if (!covered.count(z)) couples.push_back({w, z});
    }
    if (couples.empty()) return false;
    std::sort(couples.begin(), couples.end());

    // Two couples with the same target are identified when their carriers are
    // adjacent, or when a previous-level vertex spans a lifted square between
    // them.  The generating relation must already be transitive.
    int below_end = st.level_end[top - 1];
    auto related = [&](int a, int b) {
        auto [wa, za] = couples[a];
        auto [wb, zb] = couples[b];
        if (za != zb) return false;
        if (cov.adjacent(wa, wb)) return true;
        for (int u : cov.neighbors(wa)) {
            if (u >= below_end) continue;
            if (!cov.adjacent(u, wb)) continue;
            if (st.base.has_square(st.image_of(u), st.image_of(wa), za, st.image_of(wb)))
                return true;
        }
        return false;
    };

    int m = static_cast<int>(couples.size());
    union_find uf(m);
    std::map<int, std::vector<int>> by_target;
    for (int i = 0; i < m; ++i) by_target[couples[i].second].push_back(i);
    for (const auto& [z, idxs] : by_target)
        for (size_t i = 0; i < idxs.size(); ++i)
            for (size_t j = i + 1; j < idxs.size(); ++j)
                if (related(idxs[i], idxs[j])) uf.unite(idxs[i], idxs[j]);

    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < m; ++i) classes[uf.find(i)].push_back(i);
    for (const auto& [root, members] : classes)
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!related(members[i], members[j]))
                    fail(error_code::precondition,
                         "couple identification is not transitive; the base complex violates its "
                         "guarantees");

    // New ids ordered by least representative couple (couples are sorted, so
    // the first member of each class is its least one).
    std::vector<std::vector<int>> ordered;
    for (auto& [root, members] : classes) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  return couples[a.front()] < couples[b.front()];
              });

    std::vector<int> class_of(m, -1);
    for (size_t c = 0; c < ordered.size(); ++c) {
        int id = static_cast<int>(st.vertices.size());
        cover_vertex cv;
        cv.level = top + 1;
        cv.image = couples[ordered[c].front()].second;
        for (int idx : ordered[c]) {
            cv.couples.push_back(couples[idx]);
            class_of[idx] = id;
        }
        st.vertices.push_back(std::move(cv));
    }

    std::set<std::pair<int, int>> new_edges;
    // Carrier edges: each couple joins its carrier to its class.
    for (int i = 0; i < m; ++i) {
        int a = couples[i].first, b = class_of[i];
        new_edges.insert({std::min(a, b), std::max(a, b)});
    }
    // Sibling edges: classes sharing a carrier whose targets are adjacent.
    std::map<int, std::vector<int>> by_carrier;
    for (int i = 0; i < m; ++i) by_carrier[couples[i].first].push_back(i);
    for (const auto& [w, idxs] : by_carrier) {
        for (size_t i = 0; i < idxs.size(); ++i) {
            for (size_t j = i + 1; j < idxs.size(); ++j) {
                int ca = class_of[idxs[i]], cb = class_of[idxs[j]];
                if (ca == cb) continue;
                if (g.adjacent(couples[idxs[i]].second, couples[idxs[j]].second))
                    new_edges.insert({std::min(ca, cb), std::max(ca, cb)});
            }
        }
    }
    for (auto e : new_edges) st.edge_list.push_back(e);
    st.level_end.push_back(static_cast<int>(st.vertices.size()));
    st.cover = rebuild(st);
    return true;
}

cover_check_report verify_level(const cover_state& st) {
    cover_check_report rep;
    const graph& cov = st.cover;
    const graph& g = st.base.skeleton();
    int n = cov.vertex_count();
    int top = st.top_level();
    auto note = [&rep](const std::string& s) { rep.failures.push_back(s); };

    rep.balls_ok = true;
    const auto& dist = cov.distances_from(0);
    for (int x = 0; x < n; ++x) {
        if (dist[x] != st.vertices[x].level) {
            rep.balls_ok = false;
            std::ostringstream os;
            os << "cover vertex " << x << " sits at level " << st.vertices[x].level
               << " but at distance " << dist[x] << " from the basepoint";
            note(os.str());
        }
    }

    rep.basepoint_conditions_ok = true;
    if (auto w = triangle_condition(cov, 0)) {
        rep.basepoint_conditions_ok = false;
        std::ostringstream os;
        os << "triangle condition fails at the cover basepoint for pair (" << w->v << ", " << w->w
           << ")";
        note(os.str());
    }
    if (auto w = quadrangle_condition(cov, 0)) {
        rep.basepoint_conditions_ok = false;
        std::ostringstream os;
        os << "quadrangle condition fails at the cover basepoint for pair (" << w->v << ", "
           << w->w << ") over " << w->z;
        note(os.str());
    }

    auto ball_map_ok = [&](int u, bool onto, std::string* why) {
        std::vector<int> dom = cov.neighbors(u);
        dom.push_back(u);
        std::set<int> images;
        for (int p : dom) images.insert(st.image_of(p));
        if (images.size() != dom.size()) {
            *why = "projection is not injective on the unit ball";
            return false;
        }
        for (size_t i = 0; i < dom.size(); ++i) {
            for (size_t j = i + 1; j < dom.size(); ++j) {
                bool up = cov.adjacent(dom[i], dom[j]);
                bool dn = g.adjacent(st.image_of(dom[i]), st.image_of(dom[j]));
                if (up != dn) {
                    *why = "projection does not preserve adjacency on the unit ball";
                    return false;
                }
            }
        }
        if (onto) {
            std::set<int> want(g.neighbors(st.image_of(u)).begin(),
                               g.neighbors(st.image_of(u)).end());
            want.insert(st.image_of(u));
            if (images != want) {
                *why = "projection is not onto the base unit ball";
                return false;
            }
        }
        return true;
    };

    rep.interior_balls_ok = true;
    for (int u = 0; u < st.level_end[top > 0 ? top - 1 : 0]; ++u) {
        std::string why;
        if (!ball_map_ok(u, true, &why)) {
            rep.interior_balls_ok = false;
            std::ostringstream os;
            os << "cover vertex " << u << " over " << st.image_of(u) << ": " << why;
            note(os.str());
        }
    }

    rep.frontier_faithful_ok = true;
    for (int u = st.level_begin(top); u < st.level_end[top]; ++u) {
        std::string why;
        if (!ball_map_ok(u, false, &why)) {
            rep.frontier_faithful_ok = false;
            std::ostringstream os;
            os << "frontier vertex " << u << " over " << st.image_of(u) << ": " << why;
            note(os.str());
        }
    }

    rep.squares_lift_ok = true;
    int below_end = st.level_end[top > 0 ? top - 1 : 0];
    for (int wa = 0; wa < below_end && rep.squares_lift_ok; ++wa) {
        for (int wb : cov.neighbors(wa)) {
            if (wb >= below_end || wb < wa) continue;
            int a = st.image_of(wa), b = st.image_of(wb);
            // Far pairs (u, u') of base squares traversed as a-b-u-u'.
            std::set<std::pair<int, int>> far;
            for (const auto& q : st.base.squares()) {
                for (int r = 0; r < 4; ++r) {
                    int q0 = q[r], q1 = q[(r + 1) % 4], q2 = q[(r + 2) % 4], q3 = q[(r + 3) % 4];
                    if (q0 == a && q1 == b) far.insert({q2, q3});
                    if (q0 == b && q1 == a) far.insert({q3, q2});
                }
            }
            for (auto [u, uprime] : far) {
                bool lifted = false;
                for (int cu : cov.neighbors(wb)) {
                    if (st.image_of(cu) != u || cov.adjacent(cu, wa)) continue;
                    for (int cup : cov.neighbors(wa)) {
                        if (st.image_of(cup) != uprime || cov.adjacent(cup, wb)) continue;
                        if (cov.adjacent(cu, cup)) lifted = true;
                    }
                }
                if (!lifted) {
                    rep.squares_lift_ok = false;
                    std::ostringstream os;
                    os << "base square " << a << "-" << b << "-" << u << "-" << uprime
                       << " does not lift at cover edge (" << wa << ", " << wb << ")";
                    note(os.str());
                    break;
                }
            }
            if (!rep.squares_lift_ok) break;
        }
    }
    return rep;
}

const char* to_string(unfold_verdict v) {
    switch (v) {
        case unfold_verdict::stabilized: return "stabilized";
        case unfold_verdict::radius_reached: return "radius-reached";
        case unfold_verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

// Interior vertices must carry the same star of cells as their projections.
void assert_star_isomorphism(const cover_state& st, const triangle_square_complex& cover_cx) {
    int top = st.top_level();
    if (top < 2) return;
    int interior_end = st.level_end[top - 2];
    const auto& base = st.base;
    for (int w = 0; w < interior_end; ++w) {
        int im = st.image_of(w);
        std::set<std::array<int, 3>> tri_up, tri_dn;
        int tri_up_count = 0, tri_dn_count = 0;
        for (const auto& t : cover_cx.triangles())
            if (t[0] == w || t[1] == w || t[2] == w) {
                ++tri_up_count;
                std::array<int, 3> img = {st.image_of(t[0]), st.image_of(t[1]),
                                          st.image_of(t[2])};
                std::sort(img.begin(), img.end());
                tri_up.insert(img);
            }
        for (const auto& t : base.triangles())
            if (t[0] == im || t[1] == im || t[2] == im) {
                ++tri_dn_count;
                tri_dn.insert(t);
            }
        std::set<std::array<int, 4>> sq_up, sq_dn;
        int up_count = 0;
        for (const auto& q : cover_cx.squares())
            if (q[0] == w || q[1] == w || q[2] == w || q[3] == w) {
                ++up_count;
                sq_up.insert(triangle_square_complex::canonical_square(
                    {st.image_of(q[0]), st.image_of(q[1]), st.image_of(q[2]),
                     st.image_of(q[3])}));
            }
        int dn_count = 0;
        for (const auto& q : base.squares())
            if (q[0] == im || q[1] == im || q[2] == im || q[3] == im) {
                ++dn_count;
                sq_dn.insert(q);
            }
        if (tri_up != tri_dn || sq_up != sq_dn || up_count != dn_count ||
            tri_up_count != tri_dn_count) {
            std::ostringstream os;
            os << "star of interior cover vertex " << w << " does not match the star of " << im;
            fail(error_code::internal, os.str());
        }
    }
}

[[noreturn]] void report_verify_failure(const cover_state& st, const cover_check_report& rep) {
    // A clean base complex makes these invariants theorems; if the base fails
    // its own preconditions, say so instead of blaming the construction.
    auto lc = local_conditions(st.base);
    std::string head = first_failed_condition(lc)
                           ? "cover invariant violated on a base outside its guarantees: "
                           : "internal cover construction fault: ";
    fail(first_failed_condition(lc) ? error_code::precondition : error_code::internal,
         head + (rep.failures.empty() ? "unspecified" : rep.failures.front()));
}

}  // namespace

unfold_result unfold(const triangle_square_complex& x, int basepoint, std::optional<int> radius,
                     int vertex_budget, bool verify) {
    if (radius && *radius < 1) fail(error_code::invalid_argument, "radius must be at least 1");
    if (vertex_budget < 1) fail(error_code::invalid_argument, "vertex budget must be positive");
    unfold_result res;
    res.state = init_cover(x, basepoint);
    if (verify) {
        auto rep = verify_level(res.state);
        if (!rep.all_ok()) report_verify_failure(res.state, rep);
    }
    for (;;) {
        if (radius && res.state.top_level() >= *radius) {
            res.verdict = unfold_verdict::radius_reached;
            break;
        }
        if (!extend_cover(res.state)) {
            res.verdict = unfold_verdict::stabilized;
            break;
        }
        if (verify) {
            auto rep = verify_level(res.state);
            if (!rep.all_ok()) report_verify_failure(res.state, rep);
        }
        if (static_cast<int>(res.state.vertices.size()) > vertex_budget) {
            res.verdict = unfold_verdict::budget_exceeded;
            break;
        }
    }
    res.growth = res.state.level_end;
    res.cover_complex = flag_complex(res.state.cover);
    if (verify) assert_star_isomorphism(res.state, res.cover_complex);
    return res;
}

simply_connected_verdict is_simply_connected(const triangle_square_complex& x,
                                             int vertex_budget) {
    if (!x.skeleton().is_connected())
        fail(error_code::precondition, "simple connectivity requires a connected skeleton");
    auto rep = local_conditions(x);
    if (const char* name = first_failed_condition(rep))
        fail(error_code::precondition,
             std::string("simple connectivity check requires the local conditions; '") + name +
                 "' fails on this complex");
    int n = x.skeleton().vertex_count();
    cover_state st = init_cover(x, 0);
    for (;;) {
        int count = static_cast<int>(st.vertices.size());
        if (count > n) return simply_connected_verdict::no;
        if (count > vertex_budget) return simply_connected_verdict::budget_exceeded;
        if (!extend_cover(st)) break;
    }
    if (static_cast<int>(st.vertices.size()) != n) return simply_connected_verdict::no;
    std::vector<char> hit(n, 0);
    for (const auto& cv : st.vertices) {
        if (hit[cv.image]) return simply_connected_verdict::no;
        hit[cv.image] = 1;
    }
    return simply_connected_verdict::yes;
}

}  // namespace bucolic
