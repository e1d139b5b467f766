#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bucolic/patterns.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bucolic;

TEST_CASE("reference patterns have pinned sizes") {
    auto size = [](pattern p) {
        graph g = pattern_graph(p);
        return std::pair<int, int>{g.vertex_count(), g.edge_count()};
    };
    CHECK(size(pattern::k23) == std::pair<int, int>{5, 6});
    CHECK(size(pattern::c4) == std::pair<int, int>{4, 4});
    CHECK(size(pattern::c5) == std::pair<int, int>{5, 5});
    CHECK(size(pattern::w4) == std::pair<int, int>{5, 8});
    CHECK(size(pattern::w5) == std::pair<int, int>{6, 10});
    CHECK(size(pattern::almost_w4) == std::pair<int, int>{5, 7});
    CHECK(size(pattern::extended_w5) == std::pair<int, int>{7, 12});
    CHECK(size(pattern::house) == std::pair<int, int>{5, 6});
    CHECK(size(pattern::twin_house) == std::pair<int, int>{7, 10});
    CHECK(size(pattern::double_house) == std::pair<int, int>{6, 8});
    CHECK(size(pattern::cogwheel) == std::pair<int, int>{7, 9});
    CHECK(size(pattern::prism) == std::pair<int, int>{6, 9});
    CHECK(size(pattern::double_prism) == std::pair<int, int>{8, 14});
}

TEST_CASE("pattern shapes are the intended ones") {
    // The house is a triangle sharing exactly one edge with a square.
    graph house = pattern_graph(pattern::house);
    CHECK(house.common_neighbors(0, 1) == std::vector<int>{4});
    // The extended 5-wheel restricted to its first six vertices is W5.
    graph xw5 = pattern_graph(pattern::extended_w5);
    CHECK(is_isomorphic(xw5.induced({0, 1, 2, 3, 4, 5}), pattern_graph(pattern::w5)));
    CHECK(xw5.neighbors(6) == std::vector<int>{0, 1});
    // The double prism contains the prism twice around a shared square.
    graph dp = pattern_graph(pattern::double_prism);
    CHECK(is_isomorphic(dp.induced({0, 1, 2, 3, 4, 5}), pattern_graph(pattern::prism)));
    CHECK(is_isomorphic(dp.induced({0, 2, 3, 5, 6, 7}), pattern_graph(pattern::prism)));
    // The almost-wheel keeps the rim cycle and drops one spoke.
    graph aw = pattern_graph(pattern::almost_w4);
    CHECK(aw.degree(4) == 3);
    CHECK_FALSE(aw.adjacent(4, 0));
}

TEST_CASE("induced search agrees with exhaustive subset scan") {
    std::mt19937 rng(21);
    std::vector<pattern> pats = {pattern::c4, pattern::c5, pattern::k23, pattern::house,
                                 pattern::w4, pattern::almost_w4};
    for (int trial = 0; trial < 25; ++trial) {
        graph host = corpus::random_graph(7 + trial % 2, 0.35 + 0.05 * (trial % 6), rng);
        for (pattern p : pats) {
            graph pg = pattern_graph(p);
            CHECK(find_induced(host, pg) == oracles::find_induced_subsets(host, pg));
        }
    }
}

TEST_CASE("first-only search returns the lexicographically usable witness") {
    graph host = wheel_graph(4);
    auto hits = find_induced(host, pattern_graph(pattern::c4), true);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(contains_induced(host, pattern::c4));
    CHECK_FALSE(contains_induced(host, pattern::almost_w4));
    CHECK_FALSE(contains_induced(wheel_graph(5), pattern::c4));
}

TEST_CASE("embeddings preserve the pattern adjacency") {
    graph host = corpus::labeled_domino();
    auto emb = find_induced_embedding(host, pattern_graph(pattern::c4));
    REQUIRE(emb.has_value());
    graph pg = pattern_graph(pattern::c4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(pg.adjacent(i, j) == host.adjacent((*emb)[i], (*emb)[j]));
    CHECK_FALSE(find_induced_embedding(host, pattern_graph(pattern::w5)).has_value());
}

TEST_CASE("isomorphism detection") {
    CHECK(is_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)),
                        cycle_graph(4)));
    CHECK(is_isomorphic(hamming_graph({2, 2}), cycle_graph(4)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), path_graph(6)));
    // Same degree sequence, different graphs.
    graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_isomorphic(cycle_graph(6), two_triangles));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        graph g = corpus::random_graph(8, 0.4, rng);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        graph h(8, edges);
        auto iso = isomorphism(g, h);
        REQUIRE(iso.has_value());
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                CHECK(g.adjacent(u, v) == h.adjacent((*iso)[u], (*iso)[v]));
    }
}
