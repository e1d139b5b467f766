#include "corpus.hpp"
#include <bit>

#include <algorithm>
#include <map>
#include <set>

#include "bucolic/patterns.hpp"
#include "bucolic/recognition.hpp"

namespace corpus {

using bucolic::graph;

graph labeled_domino() {
    return graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}},
                 {"a1", "a2", "a3", "b1", "b2", "b3"});
}

graph labeled_p3() { return graph(3, {{0, 1}, {1, 2}}, {"a", "b", "c"}); }

namespace {

// Upper-triangle edge bit for i < j.
int edge_bit(int i, int j) { return j * (j - 1) / 2 + i; }

// Edge-index permutations for all vertex permutations of S_n.
const std::vector<std::vector<int>>& edge_perms(int n) {
    static std::map<int, std::vector<std::vector<int>>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> ep(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = sigma[i], b = sigma[j];
                if (a > b) std::swap(a, b);
                ep[edge_bit(i, j)] = edge_bit(a, b);
            }
        out.push_back(std::move(ep));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return memo.emplace(n, std::move(out)).first->second;
}

std::uint32_t canonical_code(std::uint32_t mask, int n) {
    std::uint32_t best = ~std::uint32_t{0};
    for (const auto& ep : edge_perms(n)) {
        std::uint32_t m = 0;
        for (std::uint32_t rest = mask; rest;) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            m |= std::uint32_t{1} << ep[b];
        }
        best = std::min(best, m);
    }
    return best;
}

graph graph_from_code(std::uint32_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> edge_bit(i, j)) & 1) edges.emplace_back(i, j);
    return graph(n, edges);
}

const std::vector<std::uint32_t>& codes_of_order(int n) {
    static std::map<int, std::vector<std::uint32_t>> memo{{1, {0u}}};
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    const auto& prev = codes_of_order(n - 1);
    std::set<std::uint32_t> seen;
    int base = (n - 1) * (n - 2) / 2;
    for (std::uint32_t code : prev)
        for (std::uint32_t ext = 0; ext < (std::uint32_t{1} << (n - 1)); ++ext)
            seen.insert(canonical_code(code | (ext << base), n));
    std::vector<std::uint32_t> out(seen.begin(), seen.end());
    return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

const std::vector<graph>& graphs_of_order(int n) {
    static std::map<int, std::vector<graph>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n < 1 || n > 7) bucolic::fail(bucolic::error_code::invalid_argument, "order out of range");
    std::vector<graph> out;
    for (std::uint32_t code : codes_of_order(n)) out.push_back(graph_from_code(code, n));
    return memo.emplace(n, std::move(out)).first->second;
}

std::vector<graph> connected_graphs_upto(int max_n) {
    std::vector<graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : graphs_of_order(n))
            if (g.is_connected()) out.push_back(g);
    return out;
}

graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) edges.emplace_back(i, j);
    return graph(n, edges);
}

graph random_connected_graph(int n, double p, std::mt19937& rng) {
    for (;;) {
        graph g = random_graph(n, p, rng);
        if (g.is_connected()) return g;
    }
}

graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return graph(n, edges);
}

graph glue(const graph& a, const graph& b, const std::vector<int>& sa,
           const std::vector<int>& sb) {
    if (sa.size() != sb.size())
        bucolic::fail(bucolic::error_code::invalid_argument, "glue maps differ in size");
    std::vector<int> map_b(b.vertex_count(), -1);
    for (std::size_t i = 0; i < sb.size(); ++i) map_b[sb[i]] = sa[i];
    int next = a.vertex_count();
    for (int v = 0; v < b.vertex_count(); ++v)
        if (map_b[v] < 0) map_b[v] = next++;
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(map_b[u], map_b[v]);
    return graph(next, edges);
}

namespace {

void add_if_new(std::vector<graph>& out, const graph& g, int max_n) {
    if (g.vertex_count() > max_n) return;
    for (const auto& h : out)
        if (bucolic::is_isomorphic(g, h)) return;
    out.push_back(g);
}

std::vector<graph> weakly_bridged_pieces() {
    using namespace bucolic;
    std::vector<graph> out = {
        complete_graph(3), complete_graph(4), complete_graph(5),
        graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),  // diamond
        wheel_graph(5), wheel_graph(6),
    };
    std::mt19937 rng(411);
    std::uniform_int_distribution<int> size(4, 7);
    std::uniform_real_distribution<double> prob(0.45, 0.85);
    while (out.size() < 24) {
        graph g = random_connected_graph(size(rng), prob(rng), rng);
        if (is_weakly_bridged(g) && g.edge_count() > g.vertex_count()) add_if_new(out, g, 8);
    }
    return out;
}

}  // namespace

std::vector<graph> weakly_bridged_corpus(int min_count, int max_n) {
    using namespace bucolic;
    std::vector<graph> out;
    for (const auto& g : weakly_bridged_pieces()) add_if_new(out, g, max_n);
    for (const auto& g : bridged_corpus(min_count / 2, max_n)) add_if_new(out, g, max_n);
    // Glue pieces along a shared vertex or clique.
    const auto pieces = weakly_bridged_pieces();
    std::mt19937 rng(412);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pieces.size()) - 1);
    while (static_cast<int>(out.size()) < min_count) {
        const graph& a = pieces[pick(rng)];
        const graph& b = pieces[pick(rng)];
        graph g = glue(a, b, {0}, {0});
        if (g.vertex_count() <= max_n && is_weakly_bridged(g)) add_if_new(out, g, max_n);
    }
    return out;
}

std::vector<graph> bridged_corpus(int min_count, int max_n) {
    using namespace bucolic;
    std::vector<graph> out = {complete_graph(2), complete_graph(3), complete_graph(6),
                              path_graph(5)};
    std::mt19937 rng(413);
    std::uniform_int_distribution<int> size(4, 9);
    for (int i = 0; i < 40; ++i) add_if_new(out, random_tree(size(rng), rng), max_n);
    // Random k-tree style growth: new vertex joined to a random clique.
    while (static_cast<int>(out.size()) < min_count) {
        int n = size(rng);
        graph g = complete_graph(3);
        while (g.vertex_count() < n) {
            std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
            int a = pick(rng);
            const auto& nb = g.neighbors(a);
            std::uniform_int_distribution<int> pick_nb(0, static_cast<int>(nb.size()) - 1);
            int b = nb[pick_nb(rng)];
            auto edges = g.edges();
            int v = g.vertex_count();
            edges.emplace_back(a, v);
            if (rng() % 2) edges.emplace_back(b, v);
            g = graph(v + 1, edges);
        }
        if (is_bridged(g)) add_if_new(out, g, max_n);
    }
    return out;
}

std::vector<graph> bucolic_corpus(int max_n) {
    using namespace bucolic;
    std::vector<graph> out;
    auto take = [&](const graph& g) {
        if (g.is_connected() && is_bucolic(g)) add_if_new(out, g, max_n);
    };
    take(complete_graph(1));
    take(complete_graph(2));
    take(path_graph(4));
    take(path_graph(6));
    for (int d = 1; d <= 3; ++d) take(hypercube_graph(d));
    take(cartesian_product(path_graph(3), path_graph(3)));
    take(cartesian_product(path_graph(2), path_graph(3)));
    take(cartesian_product(path_graph(2), path_graph(4)));
    take(cartesian_product(complete_graph(3), complete_graph(2)));
    take(cartesian_product(complete_graph(3), complete_graph(3)));
    take(cartesian_product(complete_graph(4), complete_graph(2)));
    take(cartesian_product(complete_graph(3), path_graph(3)));
    take(cartesian_product(wheel_graph(5), complete_graph(2)));
    take(wheel_graph(5));
    take(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));  // diamond
    std::mt19937 rng(414);
    for (int i = 0; i < 30; ++i) take(random_tree(3 + static_cast<int>(rng() % 8), rng));
    // Gated amalgams: prism glued to a square along an edge, trees onto
    // product blocks, complete pieces onto vertices.
    graph prism = cartesian_product(complete_graph(3), complete_graph(2));
    graph square = hypercube_graph(2);
    take(glue(prism, square, {0, 3}, {0, 1}));
    take(glue(square, square, {0, 1}, {0, 1}));
    take(glue(prism, prism, {0, 3}, {0, 3}));
    take(glue(prism, complete_graph(3), {0}, {0}));
    take(glue(cartesian_product(path_graph(3), path_graph(3)), path_graph(3), {8}, {0}));
    take(glue(square, complete_graph(4), {0, 1}, {0, 1}));
    take(glue(cartesian_product(complete_graph(3), complete_graph(2)), wheel_graph(5), {0}, {5}));
    for (int i = 0; i < 60 && static_cast<int>(out.size()) < 40; ++i) {
        graph t = random_tree(4 + static_cast<int>(rng() % 4), rng);
        take(glue(square, t, {0}, {0}));
        take(glue(prism, t, {1}, {0}));
    }
    return out;
}

std::vector<graph> triangle_rich_corpus(int min_count) {
    using namespace bucolic;
    auto admissible = [](const graph& g) {
        if (!g.is_connected()) return false;
        bool has_triangle = false;
        for (auto [u, v] : g.edges())
            if (!g.common_neighbors(u, v).empty()) {
                has_triangle = true;
                break;
            }
        if (!has_triangle) return false;
        if (contains_induced(g, pattern::w4) || contains_induced(g, pattern::almost_w4))
            return false;
        return is_weakly_modular(g);
    };
    std::vector<graph> out;
    auto take = [&](const graph& g) {
        if (admissible(g)) add_if_new(out, g, 32);
    };
    take(complete_graph(3));
    take(complete_graph(4));
    take(complete_graph(5));
    take(complete_graph(6));
    take(cartesian_product(complete_graph(3), complete_graph(2)));
    take(cartesian_product(complete_graph(3), complete_graph(3)));
    take(cartesian_product(complete_graph(4), complete_graph(2)));
    take(wheel_graph(5));
    take(wheel_graph(6));
    take(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));  // diamond
    for (const auto& g : weakly_bridged_pieces()) take(g);
    std::mt19937 rng(415);
    std::uniform_int_distribution<int> size(4, 8);
    std::uniform_real_distribution<double> prob(0.4, 0.85);
    int tries = 0;
    while (static_cast<int>(out.size()) < min_count && tries < 200000) {
        ++tries;
        take(random_connected_graph(size(rng), prob(rng), rng));
    }
    return out;
}

}  // namespace corpus
