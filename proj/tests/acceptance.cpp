// Acceptance gate: each criterion prints exactly one pass/FAIL line and the
// binary exits nonzero when any criterion fails.  Wall-clock limits are pinned
// here, next to the checks they bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bucolic/complex.hpp"
#include "bucolic/cover.hpp"
#include "bucolic/decompose.hpp"
#include "bucolic/graph.hpp"
#include "bucolic/hulls.hpp"
#include "bucolic/mooring.hpp"
#include "bucolic/patterns.hpp"
#include "bucolic/recognition.hpp"
#include "bucolic/symmetry.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace {

using namespace bucolic;

struct criterion_run {
    bool ok = true;
    std::string detail;

    // Keeps the first failure; later ones add no signal to a one-line report.
    void fail(std::string msg) {
        if (ok) {
            ok = false;
            detail = std::move(msg);
        }
    }
};

std::string str(long long v) { return std::to_string(v); }

std::string id_set(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

bool has_triangle(const graph& g) {
    for (auto [u, v] : g.edges())
        if (!g.common_neighbors(u, v).empty()) return true;
    return false;
}

std::vector<std::vector<int>> triangles_of(const graph& g) {
    std::vector<std::vector<int>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int w : g.common_neighbors(u, v))
                if (w > v) out.push_back({u, v, w});
        }
    return out;
}

// --- criterion 1: optimized distance-condition checker vs naive oracle -----

void criterion_oracle_agreement(criterion_run& r) {
    auto catalog = corpus::connected_graphs_upto(7);
    // Connected isomorphism classes by order: 1,1,2,6,21,112,853.
    if (catalog.size() != 996) {
        r.fail("expected 996 connected isomorphism classes up to order 7, got " +
               str(static_cast<long long>(catalog.size())));
        return;
    }
    auto agree = [&](const graph& g, const std::string& name) {
        bool fast = is_weakly_modular(g);
        bool slow = oracles::weakly_modular(g);
        if (fast != slow) {
            r.fail("checker and oracle disagree on " + name);
            return false;
        }
        if (!fast) {
            auto w = weak_modularity_witness(g);
            if (!w || !replay_condition_witness(g, *w)) {
                r.fail("no replaying violation witness for " + name);
                return false;
            }
        }
        return true;
    };
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (!agree(catalog[i], "catalog graph #" + str(static_cast<long long>(i)))) return;
    std::mt19937 rng(9001);
    std::uniform_int_distribution<int> size(8, 10);
    std::uniform_real_distribution<double> prob(0.2, 0.9);
    int positives = 0;
    for (int t = 0; t < 1000; ++t) {
        graph g = corpus::random_connected_graph(size(rng), prob(rng), rng);
        if (!agree(g, "random graph #" + str(t))) return;
        if (is_weakly_modular(g)) ++positives;
    }
    r.detail = "996 exhaustive + 1000 random graphs match the naive oracle (" + str(positives) +
               " random positives)";
}

// --- criterion 2: recognition fixtures --------------------------------------

std::vector<graph> all_trees_upto(int max_n) {
    std::vector<std::vector<graph>> by_n(max_n + 1);
    by_n[1] = {graph(1, {})};
    for (int n = 2; n <= max_n; ++n)
        for (const auto& t : by_n[n - 1])
            for (int v = 0; v < n - 1; ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, n - 1);
                graph cand(n, edges);
                bool fresh = true;
                for (const auto& seen : by_n[n])
                    if (is_isomorphic(cand, seen)) {
                        fresh = false;
                        break;
                    }
                if (fresh) by_n[n].push_back(cand);
            }
    std::vector<graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& t : by_n[n]) out.push_back(t);
    return out;
}

void criterion_recognition_fixtures(criterion_run& r) {
    std::vector<std::pair<std::string, graph>> members;
    for (int k = 1; k <= 4; ++k) members.emplace_back("Q" + str(k), hypercube_graph(k));
    auto trees = all_trees_upto(10);
    // Free-tree counts by order: 1,1,1,2,3,6,11,23,47,106.
    if (trees.size() != 201) {
        r.fail("expected 201 trees up to order 10, got " + str(static_cast<long long>(trees.size())));
        return;
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
        members.emplace_back("tree #" + str(static_cast<long long>(i)), trees[i]);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            members.emplace_back("P" + str(m) + " x P" + str(n),
                                 cartesian_product(path_graph(m), path_graph(n)));
    members.emplace_back("K3 x K3", cartesian_product(complete_graph(3), complete_graph(3)));
    members.emplace_back("K3 x K2", cartesian_product(complete_graph(3), complete_graph(2)));
    for (const auto& [name, g] : members) {
        auto res = check_class(g, graph_class::bucolic);
        if (!res.member || !res.certificates.empty()) {
            r.fail("member fixture rejected: " + name);
            return;
        }
    }
    std::vector<std::pair<std::string, graph>> non_members = {
        {"K23", complete_bipartite_graph(2, 3)},
        {"W4", wheel_graph(4)},
        {"W4 minus a spoke", almost_wheel_graph(4)},
        {"house", pattern_graph(pattern::house)},
        {"C5", cycle_graph(5)},
        {"C6", cycle_graph(6)},
    };
    for (const auto& [name, g] : non_members) {
        auto res = check_class(g, graph_class::bucolic);
        if (res.member || res.certificates.empty()) {
            r.fail("non-member fixture accepted: " + name);
            return;
        }
        for (const auto& c : res.certificates)
            if (!replay_certificate(g, c)) {
                r.fail("certificate does not replay on " + name);
                return;
            }
    }
    r.detail = str(static_cast<long long>(members.size())) + " members accepted, " +
               str(static_cast<long long>(non_members.size())) +
               " non-members refuted with replaying certificates";
}

// --- criterion 3: gated hulls of triangles ----------------------------------

std::optional<std::pair<int, int>> gated_edge(const graph& g) {
    for (auto [u, v] : g.edges())
        if (is_gated(g, {u, v})) return std::make_pair(u, v);
    return std::nullopt;
}

void criterion_triangle_hulls(criterion_run& r) {
    auto pieces = corpus::weakly_bridged_corpus(30, 12);
    std::vector<graph> cases;
    auto in_class = [&](const graph& g) {
        return has_triangle(g) && is_weakly_modular(g) && !contains_induced(g, pattern::w4) &&
               !contains_induced(g, pattern::almost_w4);
    };
    auto push = [&](const graph& g) {
        if (static_cast<int>(cases.size()) < 140 && g.vertex_count() <= 36 && in_class(g))
            cases.push_back(g);
    };
    int piece_count = static_cast<int>(pieces.size());
    for (const auto& a : pieces) push(cartesian_product(a, complete_graph(2)));
    for (const auto& a : pieces)
        if (a.vertex_count() * 3 <= 36) push(cartesian_product(a, complete_graph(3)));
    for (int i = 0; i < piece_count; ++i)
        push(corpus::glue(pieces[i], pieces[(i + 1) % piece_count], {0}, {0}));
    for (int i = 0; i < piece_count; ++i) {
        const graph& a = pieces[i];
        const graph& b = pieces[(i + 2) % piece_count];
        auto ea = gated_edge(a);
        auto eb = gated_edge(b);
        if (ea && eb)
            push(corpus::glue(a, b, {ea->first, ea->second}, {eb->first, eb->second}));
    }
    for (int i = 0; i < piece_count; ++i)
        push(corpus::glue(cartesian_product(pieces[i], complete_graph(2)),
                          pieces[(i + 1) % piece_count], {0}, {0}));
    for (int i = 0; i < piece_count; ++i)
        for (int j = i; j < piece_count; ++j)
            if (pieces[i].vertex_count() * pieces[j].vertex_count() <= 36)
                push(cartesian_product(pieces[i], pieces[j]));
    if (cases.size() < 100) {
        r.fail("only " + str(static_cast<long long>(cases.size())) + " generated graphs, need 100");
        return;
    }
    int hulls = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const graph& g = cases[i];
        int used = 0;
        for (const auto& tri : triangles_of(g)) {
            auto h = gated_hull_of_triangle(g, tri);
            std::string where = "graph #" + str(static_cast<long long>(i)) + ", triangle " + id_set(tri);
            if (!replay_hull(g, h)) {
                r.fail("hull trace does not replay on " + where);
                return;
            }
            if (!is_gated(g, h.vertices)) {
                r.fail("hull not gated on " + where);
                return;
            }
            graph sub = g.induced(h.vertices);
            if (!is_two_connected(sub)) {
                r.fail("hull not two-connected on " + where);
                return;
            }
            if (!is_weakly_bridged(sub)) {
                r.fail("hull not weakly bridged on " + where);
                return;
            }
            ++hulls;
            if (++used == 3) break;
        }
    }
    r.detail = str(static_cast<long long>(cases.size())) + " product/amalgam graphs, " + str(hulls) +
               " triangle hulls gated, two-connected, weakly bridged";
}

// --- criterion 4: cover growth laws -----------------------------------------

void criterion_cover_growth(criterion_run& r) {
    auto hexagon = flag_complex(cycle_graph(6));
    auto line_res = unfold(hexagon, 0, 6, 100000, true);
    if (line_res.verdict != unfold_verdict::radius_reached || line_res.growth.size() != 7) {
        r.fail("C6 cover did not reach radius 6");
        return;
    }
    graph line_window = path_graph(15);  // window on the two-way infinite path
    for (int rad = 0; rad <= 6; ++rad) {
        int formula = 2 * rad + 1;
        int brute = oracles::ball_size(line_window, 7, rad);
        if (line_res.growth[rad] != formula || brute != formula) {
            r.fail("C6 cover ball at radius " + str(rad) + " is " + str(line_res.growth[rad]) +
                   ", formula " + str(formula) + ", brute force " + str(brute));
            return;
        }
    }
    auto line_check = verify_level(line_res.state);
    if (!line_check.all_ok()) {
        r.fail("C6 cover level check: " + line_check.failures.front());
        return;
    }

    auto torus = flag_complex(cartesian_product(cycle_graph(5), cycle_graph(5)));
    auto grid_res = unfold(torus, 0, 4, 100000, true);
    if (grid_res.verdict != unfold_verdict::radius_reached || grid_res.growth.size() != 5) {
        r.fail("C5 x C5 cover did not reach radius 4");
        return;
    }
    graph grid_window = cartesian_product(path_graph(11), path_graph(11));
    for (int rad = 0; rad <= 4; ++rad) {
        int formula = 2 * rad * rad + 2 * rad + 1;
        int brute = oracles::ball_size(grid_window, 5 * 11 + 5, rad);
        if (grid_res.growth[rad] != formula || brute != formula) {
            r.fail("C5 x C5 cover ball at radius " + str(rad) + " is " + str(grid_res.growth[rad]) +
                   ", formula " + str(formula) + ", brute force " + str(brute));
            return;
        }
    }
    auto grid_check = verify_level(grid_res.state);
    if (!grid_check.all_ok()) {
        r.fail("C5 x C5 cover level check: " + grid_check.failures.front());
        return;
    }
    r.detail = "C6 cover grows 2r+1 (r<=6) and C5 x C5 cover grows 2r^2+2r+1 (r<=4), "
               "matching brute-force balls; every level re-verified";
}

// --- criterion 5: simple connectivity vs skeleton conditions ----------------

void criterion_simple_connectivity(criterion_run& r) {
    std::vector<graph> skeletons;
    for (const auto& g : corpus::bucolic_corpus(10)) skeletons.push_back(g);
    for (const auto& g : corpus::weakly_bridged_corpus(15, 9)) skeletons.push_back(g);
    for (int k = 5; k <= 10; ++k) skeletons.push_back(cycle_graph(k));
    for (int k = 5; k <= 7; ++k)
        skeletons.push_back(cartesian_product(cycle_graph(k), complete_graph(2)));
    skeletons.push_back(cartesian_product(cycle_graph(5), cycle_graph(5)));
    skeletons.push_back(cartesian_product(cycle_graph(6), complete_graph(3)));
    int admissible = 0, connected_yes = 0, connected_no = 0;
    for (std::size_t i = 0; i < skeletons.size(); ++i) {
        const graph& g = skeletons[i];
        auto x = flag_complex(g);
        if (!local_conditions(x).admissible()) continue;
        ++admissible;
        auto verdict = is_simply_connected(x, 100000);
        if (verdict == simply_connected_verdict::budget_exceeded) {
            r.fail("cover budget exceeded on complex #" + str(static_cast<long long>(i)));
            return;
        }
        bool cover_route = verdict == simply_connected_verdict::yes;
        bool condition_route = is_bucolic(g);
        if (cover_route != condition_route) {
            r.fail("routes disagree on complex #" + str(static_cast<long long>(i)) + " (" +
                   str(g.vertex_count()) + " vertices): cover says " +
                   (cover_route ? "yes" : "no") + ", conditions say " +
                   (condition_route ? "yes" : "no"));
            return;
        }
        (cover_route ? connected_yes : connected_no)++;
    }
    if (admissible < 50) {
        r.fail("only " + str(admissible) + " admissible complexes, need 50");
        return;
    }
    if (connected_yes < 10 || connected_no < 10) {
        r.fail("verdict mix too thin: " + str(connected_yes) + " yes / " + str(connected_no) +
               " no");
        return;
    }
    r.detail = str(admissible) + " admissible flag complexes agree on both routes (" +
               str(connected_yes) + " simply connected, " + str(connected_no) + " not)";
}

// --- criterion 6: decomposition round-trip ----------------------------------

void criterion_decomposition(criterion_run& r) {
    auto corpus_graphs = corpus::bucolic_corpus(12);
    int leaves = 0;
    for (std::size_t i = 0; i < corpus_graphs.size(); ++i) {
        const graph& g = corpus_graphs[i];
        auto tree = decompose_bucolic(g);
        auto chk = verify_decomposition(tree, g);
        if (!chk.ok) {
            r.fail("graph #" + str(static_cast<long long>(i)) + " (" + str(g.vertex_count()) +
                   " vertices): " + (chk.diagnostics.empty() ? "no diagnostic" : chk.diagnostics.front()));
            return;
        }
        leaves += tree.leaf_count();
    }
    r.detail = str(static_cast<long long>(corpus_graphs.size())) +
               " graphs decomposed, recomposed isomorphically, " + str(leaves) +
               " leaves and all separators re-verified";
}

// --- criterion 7: moorings fellow-travel ------------------------------------

void criterion_moorings(criterion_run& r) {
    auto weakly = corpus::weakly_bridged_corpus(30, 12);
    if (weakly.size() < 30) {
        r.fail("weakly bridged corpus too small: " + str(static_cast<long long>(weakly.size())));
        return;
    }
    int lex_count = 0;
    for (std::size_t i = 0; i < weakly.size(); ++i)
        for (int u = 0; u < weakly[i].vertex_count(); ++u) {
            auto m = lexbfs_mooring(weakly[i], u);
            validate_mooring(weakly[i], m);
            auto c = verify_combing(weakly[i], m);
            if (!c.ok) {
                r.fail("LexBFS mooring fails on weakly bridged graph #" +
                       str(static_cast<long long>(i)) + ", base " + str(u) + ", edge (" +
                       str(c.edge.first) + "," + str(c.edge.second) + ")");
                return;
            }
            ++lex_count;
        }
    auto bridged = corpus::bridged_corpus(30, 12);
    int bfs_count = 0;
    for (std::size_t i = 0; i < bridged.size(); ++i)
        for (int u = 0; u < bridged[i].vertex_count(); ++u) {
            auto m = bfs_mooring(bridged[i], u);
            validate_mooring(bridged[i], m);
            auto c = verify_combing(bridged[i], m);
            if (!c.ok) {
                r.fail("BFS mooring fails on bridged graph #" + str(static_cast<long long>(i)) +
                       ", base " + str(u) + ", edge (" + str(c.edge.first) + "," +
                       str(c.edge.second) + ")");
                return;
            }
            ++bfs_count;
        }
    r.detail = str(lex_count) + " LexBFS moorings on " +
               str(static_cast<long long>(weakly.size())) + " weakly bridged graphs and " +
               str(bfs_count) + " BFS moorings on " + str(static_cast<long long>(bridged.size())) +
               " bridged graphs comb";
}

// --- criterion 8: invariant prisms ------------------------------------------

graph wheel_prism() { return cartesian_product(wheel_graph(5), complete_graph(2)); }

std::vector<int> wheel_prism_rotation() {
    std::vector<int> p(12);
    for (int i = 0; i < 5; ++i)
        for (int y = 0; y < 2; ++y) p[2 * i + y] = 2 * ((i + 1) % 5) + y;
    p[10] = 10;
    p[11] = 11;
    return p;
}

std::vector<int> wheel_prism_swap() {
    std::vector<int> p(12);
    for (int x = 0; x < 6; ++x) {
        p[2 * x] = 2 * x + 1;
        p[2 * x + 1] = 2 * x;
    }
    return p;
}

void criterion_invariant_prisms(criterion_run& r) {
    struct symmetry_case {
        std::string name;
        graph g;
        std::vector<std::vector<int>> gens;
        std::vector<int> expect;  // empty = confirmed by the oracle only
    };
    graph prism = cartesian_product(complete_graph(3), complete_graph(2));
    std::vector<symmetry_case> cases = {
        {"P3 swap", corpus::labeled_p3(), {{2, 1, 0}}, {1}},
        {"domino point reflection", corpus::labeled_domino(), {{5, 4, 3, 2, 1, 0}}, {1, 4}},
        {"Q3 antipodal", hypercube_graph(3), {{7, 6, 5, 4, 3, 2, 1, 0}}, {0, 1, 2, 3, 4, 5, 6, 7}},
        {"P4 swap", path_graph(4), {{3, 2, 1, 0}}, {}},
        {"P3 x P3 quarter turn", cartesian_product(path_graph(3), path_graph(3)),
         {{2, 5, 8, 1, 4, 7, 0, 3, 6}}, {4}},
        {"W5 x K2 rotation and swap", wheel_prism(), {wheel_prism_rotation(), wheel_prism_swap()},
         {10, 11}},
        {"K2 swap", complete_graph(2), {{1, 0}}, {0, 1}},
        {"K3 rotation", complete_graph(3), {{1, 2, 0}}, {0, 1, 2}},
        {"K4 double transposition", complete_graph(4), {{1, 0, 3, 2}}, {}},
        {"C4 rotation", cycle_graph(4), {{1, 2, 3, 0}}, {0, 1, 2, 3}},
        {"P5 swap", path_graph(5), {{4, 3, 2, 1, 0}}, {2}},
        {"Q3 axis swap", hypercube_graph(3), {{0, 2, 1, 3, 4, 6, 5, 7}}, {}},
        {"domino layer swap", corpus::labeled_domino(), {{3, 4, 5, 0, 1, 2}}, {}},
        {"prism rotation", prism, {{2, 3, 4, 5, 0, 1}}, {0, 2, 4}},
        {"prism layer swap", prism, {{1, 0, 3, 2, 5, 4}}, {}},
        {"star rotation", graph(4, {{0, 1}, {0, 2}, {0, 3}}), {{0, 2, 3, 1}}, {0}},
        {"P7 swap", path_graph(7), {{6, 5, 4, 3, 2, 1, 0}}, {3}},
        {"spider leaf swap", graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}), {{0, 1, 2, 4, 3}}, {}},
        {"P3 x P3 diagonal flip", cartesian_product(path_graph(3), path_graph(3)),
         {{0, 3, 6, 1, 4, 7, 2, 5, 8}}, {}},
        {"K3 x K3 transpose", cartesian_product(complete_graph(3), complete_graph(3)),
         {{0, 3, 6, 1, 4, 7, 2, 5, 8}}, {}},
        {"K5 rotation", complete_graph(5), {{1, 2, 3, 4, 0}}, {0, 1, 2, 3, 4}},
        {"domino vertical reflection", corpus::labeled_domino(), {{2, 1, 0, 5, 4, 3}}, {}},
    };
    if (cases.size() < 20) {
        r.fail("fixture table too small");
        return;
    }
    for (const auto& c : cases) {
        group_action f = group_closure(c.g, c.gens);
        if (c.g.vertex_count() > 12 || f.order() > 12) {
            r.fail(c.name + ": fixture outside the size bounds");
            return;
        }
        auto res = fixed_prism(c.g, f);
        if (!verify_prism_witness(c.g, f, res.prism)) {
            r.fail(c.name + ": returned prism fails re-verification");
            return;
        }
        auto oracle = brute_force_invariant_prism(c.g, f);
        if (oracle.empty()) {
            r.fail(c.name + ": oracle found no invariant prism");
            return;
        }
        bool listed = false;
        for (const auto& w : oracle)
            if (w.vertices == res.prism.vertices) {
                listed = true;
                break;
            }
        if (!listed) {
            r.fail(c.name + ": returned prism " + id_set(res.prism.vertices) +
                   " is not in the oracle enumeration");
            return;
        }
        std::size_t minimal = oracle.front().vertices.size();
        bool covers_minimal = false;
        for (const auto& w : oracle) {
            if (w.vertices.size() != minimal) break;
            if (std::includes(res.prism.vertices.begin(), res.prism.vertices.end(),
                              w.vertices.begin(), w.vertices.end())) {
                covers_minimal = true;
                break;
            }
        }
        if (!covers_minimal) {
            r.fail(c.name + ": returned prism " + id_set(res.prism.vertices) +
                   " contains no minimal invariant prism");
            return;
        }
        if (!c.expect.empty() && res.prism.vertices != c.expect) {
            r.fail(c.name + ": expected " + id_set(c.expect) + ", got " +
                   id_set(res.prism.vertices));
            return;
        }
    }
    // The pinned P3 fixture must land on the middle vertex by name as well.
    {
        graph p3 = corpus::labeled_p3();
        auto res = fixed_prism(p3, group_closure(p3, {{2, 1, 0}}));
        if (res.prism.vertices != std::vector<int>{1} || p3.label(1) != "b") {
            r.fail("P3 swap does not settle on vertex b");
            return;
        }
    }
    r.detail = str(static_cast<long long>(cases.size())) +
               " graph/group pairs confirmed against the exhaustive prism enumeration";
}

// --- criterion 9: hulls in Cartesian products factor ------------------------

void criterion_hull_product_law(criterion_run& r) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> factor_size(2, 5);
    std::uniform_real_distribution<double> factor_prob(0.3, 0.9);
    for (int t = 0; t < 100; ++t) {
        int k = 2 + (t % 2);
        std::vector<graph> factors;
        std::vector<int> sizes;
        for (int j = 0; j < k; ++j) {
            factors.push_back(corpus::random_connected_graph(factor_size(rng), factor_prob(rng), rng));
            sizes.push_back(factors.back().vertex_count());
        }
        graph product = factors[0];
        for (int j = 1; j < k; ++j) product = cartesian_product(product, factors[j]);
        int n = product.vertex_count();
        auto encode = [&](const std::vector<int>& xs) {
            int id = 0;
            for (int j = 0; j < k; ++j) id = id * sizes[j] + xs[j];
            return id;
        };
        auto decode = [&](int id) {
            std::vector<int> xs(k);
            for (int j = k - 1; j >= 0; --j) {
                xs[j] = id % sizes[j];
                id /= sizes[j];
            }
            return xs;
        };
        // Spot-check the mixed-radix labeling against the product's adjacency.
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int s = 0; s < 50; ++s) {
            int u = pick(rng), v = pick(rng);
            auto xu = decode(u), xv = decode(v);
            int changed = 0;
            bool edge_step = false;
            for (int j = 0; j < k; ++j)
                if (xu[j] != xv[j]) {
                    ++changed;
                    edge_step = factors[j].adjacent(xu[j], xv[j]);
                }
            bool expect_adj = changed == 1 && edge_step;
            if (product.adjacent(u, v) != expect_adj) {
                r.fail("trial " + str(t) + ": product labeling mismatch");
                return;
            }
        }
        std::uniform_int_distribution<int> seed_size(1, std::min(6, n));
        std::set<int> seed;
        int target = seed_size(rng);
        while (static_cast<int>(seed.size()) < target) seed.insert(pick(rng));
        std::vector<int> seed_list(seed.begin(), seed.end());
        auto direct = convex_hull(product, seed_list).vertices;
        std::sort(direct.begin(), direct.end());

        std::vector<std::vector<int>> factor_hulls(k);
        for (int j = 0; j < k; ++j) {
            std::set<int> proj;
            for (int v : seed_list) proj.insert(decode(v)[j]);
            factor_hulls[j] =
                convex_hull(factors[j], std::vector<int>(proj.begin(), proj.end())).vertices;
            std::sort(factor_hulls[j].begin(), factor_hulls[j].end());
        }
        std::vector<int> expected;
        std::vector<std::size_t> idx(k, 0);
        for (;;) {
            std::vector<int> xs(k);
            for (int j = 0; j < k; ++j) xs[j] = factor_hulls[j][idx[j]];
            expected.push_back(encode(xs));
            int j = k - 1;
            while (j >= 0 && ++idx[j] == factor_hulls[j].size()) {
                idx[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        std::sort(expected.begin(), expected.end());
        if (direct != expected) {
            r.fail("trial " + str(t) + ": hull has " + str(static_cast<long long>(direct.size())) +
                   " vertices, factor-hull product has " +
                   str(static_cast<long long>(expected.size())));
            return;
        }
    }
    r.detail = "100 random seed sets in 2- and 3-factor products equal the product of factor hulls";
}

// --- driver ------------------------------------------------------------------

void run(int number, void (*fn)(criterion_run&), double limit_seconds, int& failures) {
    criterion_run r;
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const std::exception& e) {
        r.fail(std::string("unexpected exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && limit_seconds > 0 && seconds > limit_seconds) {
        r.ok = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "runtime %.1fs exceeds the %.0fs limit", seconds,
                      limit_seconds);
        r.detail = buf;
    }
    char timing[64];
    if (limit_seconds > 0)
        std::snprintf(timing, sizeof timing, "(%.1fs, limit %.0fs)", seconds, limit_seconds);
    else
        std::snprintf(timing, sizeof timing, "(%.1fs)", seconds);
    std::printf("criterion %d: %s  [%s]  %s\n", number, r.ok ? "pass" : "FAIL", r.detail.c_str(),
                timing);
    std::fflush(stdout);
    if (!r.ok) ++failures;
}

}  // namespace

int main() {
    constexpr double oracle_limit_seconds = 60.0;
    constexpr double growth_limit_seconds = 10.0;
    constexpr double decompose_limit_seconds = 120.0;

    int failures = 0;
    run(1, criterion_oracle_agreement, oracle_limit_seconds, failures);
    run(2, criterion_recognition_fixtures, 0.0, failures);
    run(3, criterion_triangle_hulls, 0.0, failures);
    run(4, criterion_cover_growth, growth_limit_seconds, failures);
    run(5, criterion_simple_connectivity, 0.0, failures);
    run(6, criterion_decomposition, decompose_limit_seconds, failures);
    run(7, criterion_moorings, 0.0, failures);
    run(8, criterion_invariant_prisms, 0.0, failures);
    run(9, criterion_hull_product_law, 0.0, failures);
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
