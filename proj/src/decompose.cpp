#include "bucolic/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bucolic/errors.hpp"
#include "bucolic/hulls.hpp"
#include "bucolic/patterns.hpp"
#include "bucolic/recognition.hpp"

namespace bucolic {

namespace {

struct union_find {
    std::vector<int> parent;
    explicit union_find(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string set_to_string(const std::vector<int>& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ", ";
        out << s[i];
    }
    out << '}';
    return out.str();
}

std::vector<int> mask_to_set(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

}  // namespace

std::vector<graph> cartesian_prime_factorization(const graph& g) {
    return cartesian_factorization(g).factors;
}

factorization cartesian_factorization(const graph& g) {
    if (!g.is_connected()) fail(error_code::disconnected, "factorization requires a connected graph");
    const int n = g.vertex_count();
    const auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    if (m == 0) return {{g}, {{0}}};

    union_find classes(m);

    // Distance relation: edges violating the product distance identity share a factor.
    for (int e = 0; e < m; ++e) {
        auto [x, y] = edge_list[e];
        const auto& dx = g.distances_from(x);
        const auto& dy = g.distances_from(y);
        for (int f = e + 1; f < m; ++f) {
            auto [u, v] = edge_list[f];
            if (dx[u] + dy[v] != dx[v] + dy[u]) classes.unite(e, f);
        }
    }

    // Incident edges stay in one factor unless they span a chordless square.
    std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < m; ++e) {
        auto [x, y] = edge_list[e];
        edge_id[static_cast<std::size_t>(x) * n + y] = e;
        edge_id[static_cast<std::size_t>(y) * n + x] = e;
    }
    for (int x = 0; x < n; ++x) {
        const auto& nbr = g.neighbors(x);
        for (std::size_t i = 0; i < nbr.size(); ++i)
            for (std::size_t j = i + 1; j < nbr.size(); ++j) {
                int y = nbr[i], z = nbr[j];
                bool square = false;
                if (!g.adjacent(y, z))
                    for (int w : g.common_neighbors(y, z))
                        if (w != x && !g.adjacent(w, x)) {
                            square = true;
                            break;
                        }
                if (!square)
                    classes.unite(edge_id[static_cast<std::size_t>(x) * n + y],
                                  edge_id[static_cast<std::size_t>(x) * n + z]);
            }
    }

    // Classes ordered by least edge index.
    std::map<int, std::vector<int>> by_root;
    for (int e = 0; e < m; ++e) by_root[classes.find(e)].push_back(e);
    std::vector<std::vector<int>> edge_classes;
    for (auto& [root, members] : by_root) edge_classes.push_back(std::move(members));
    std::sort(edge_classes.begin(), edge_classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    const int k = static_cast<int>(edge_classes.size());

    // Layer through vertex 0 per class, plus each vertex's coordinate in it.
    std::vector<graph> factors;
    std::vector<std::vector<int>> digit(k, std::vector<int>(n, -1));
    for (int c = 0; c < k; ++c) {
        std::vector<char> in_class(m, 0);
        for (int e : edge_classes[c]) in_class[e] = 1;

        auto reach = [&](bool inside) {
            // Component labels using only class edges (inside) or only the rest.
            std::vector<int> comp(n, -1);
            int count = 0;
            for (int s = 0; s < n; ++s) {
                if (comp[s] != -1) continue;
                comp[s] = count;
                std::vector<int> stack{s};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v : g.neighbors(u)) {
                        int e = edge_id[static_cast<std::size_t>(u) * n + v];
                        if ((in_class[e] != 0) != inside || comp[v] != -1) continue;
                        comp[v] = count;
                        stack.push_back(v);
                    }
                }
                ++count;
            }
            return comp;
        };
        const auto layer_comp = reach(true);
        const auto cross_comp = reach(false);

        std::vector<int> layer;
        for (int v = 0; v < n; ++v)
            if (layer_comp[v] == layer_comp[0]) layer.push_back(v);
        std::vector<int> position(n, -1);
        for (std::size_t i = 0; i < layer.size(); ++i) position[layer[i]] = static_cast<int>(i);

        std::vector<std::pair<int, int>> factor_edges;
        for (int e : edge_classes[c]) {
            auto [u, v] = edge_list[e];
            if (position[u] != -1 && position[v] != -1)
                factor_edges.emplace_back(position[u], position[v]);
        }
        factors.emplace_back(static_cast<int>(layer.size()), factor_edges);

        for (int v = 0; v < n; ++v) {
            int hits = 0;
            for (int x : layer)
                if (cross_comp[x] == cross_comp[v]) {
                    digit[c][v] = position[x];
                    ++hits;
                }
            if (hits != 1)
                fail(error_code::internal, "factor coordinates are not unique; factorization is inconsistent");
        }
    }

    // Rebuild the product and check the coordinate map is an isomorphism.
    graph rebuilt = factors[0];
    for (int c = 1; c < k; ++c) rebuilt = cartesian_product(rebuilt, factors[c]);
    if (rebuilt.vertex_count() != n)
        fail(error_code::internal, "factor sizes do not multiply to the graph order");
    std::vector<int> to_product(n);
    std::vector<char> hit(n, 0);
    for (int v = 0; v < n; ++v) {
        long long id = 0;
        for (int c = 0; c < k; ++c) id = id * factors[c].vertex_count() + digit[c][v];
        to_product[v] = static_cast<int>(id);
        if (hit[id]) fail(error_code::internal, "factor coordinates collide; factorization is inconsistent");
        hit[id] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != rebuilt.adjacent(to_product[u], to_product[v]))
                fail(error_code::internal, "rebuilt product is not isomorphic to the input graph");

    std::vector<std::vector<int>> coordinates(n, std::vector<int>(k));
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) coordinates[v][c] = digit[c][v];
    return {std::move(factors), std::move(coordinates)};
}

std::vector<gated_separator> find_gated_separators(const graph& g, int bound) {
    if (!g.is_connected()) fail(error_code::disconnected, "separator search requires a connected graph");
    const int n = g.vertex_count();
    if (n > bound)
        fail(error_code::bound_exceeded,
             "exact separator search refused: " + std::to_string(n) + " vertices exceed the bound of " +
                 std::to_string(bound));
    if (n > 62) fail(error_code::bound_exceeded, "exact separator search supports at most 62 vertices");

    // Gated sets are convex, so every inside pair's interval must stay inside.
    std::vector<std::vector<std::uint64_t>> interval_mask(n, std::vector<std::uint64_t>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t mask = 0;
            for (int x : g.interval(u, v)) mask |= std::uint64_t{1} << x;
            interval_mask[u][v] = interval_mask[v][u] = mask;
        }

    std::vector<gated_separator> out;
    const std::uint64_t full = (n == 62) ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        if (n - std::popcount(mask) < 2) continue;
        const auto members = mask_to_set(mask, n);
        bool convex = true;
        for (std::size_t i = 0; i < members.size() && convex; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (interval_mask[members[i]][members[j]] & ~mask) {
                    convex = false;
                    break;
                }
        if (!convex || !is_gated(g, members)) continue;

        // Components of the complement.
        std::vector<int> comp(n, -1);
        int comp_count = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1 || (mask >> s & 1)) continue;
            comp[s] = comp_count;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.neighbors(u))
                    if (!(mask >> v & 1) && comp[v] == -1) {
                        comp[v] = comp_count;
                        stack.push_back(v);
                    }
            }
            ++comp_count;
        }
        if (comp_count < 2) continue;

        std::vector<std::uint64_t> comp_mask(comp_count, 0);
        for (int v = 0; v < n; ++v)
            if (comp[v] != -1) comp_mask[comp[v]] |= std::uint64_t{1} << v;

        // Two-sided covers: component 0 anchors one side; both groups nonempty.
        const std::uint32_t groups = std::uint32_t{1} << (comp_count - 1);
        for (std::uint32_t pick = 0; pick + 1 < groups; ++pick) {
            std::uint64_t side_mask = mask | comp_mask[0];
            std::uint64_t other_mask = mask;
            for (int c = 1; c < comp_count; ++c)
                ((pick >> (c - 1) & 1) ? side_mask : other_mask) |= comp_mask[c];
            auto side = mask_to_set(side_mask, n);
            auto other = mask_to_set(other_mask, n);
            if (!is_gated(g, side) || !is_gated(g, other)) continue;
            if (other.size() < side.size() || (other.size() == side.size() && other < side))
                std::swap(side, other);
            out.push_back({members, std::move(side), std::move(other)});
        }
    }

    std::sort(out.begin(), out.end(), [](const gated_separator& a, const gated_separator& b) {
        if (a.separator.size() != b.separator.size()) return a.separator.size() < b.separator.size();
        if (a.separator != b.separator) return a.separator < b.separator;
        return a.side_a < b.side_a;
    });
    return out;
}

peripheral_report peripheral_subgraphs(const graph& g, int bound) {
    if (!g.is_connected())
        fail(error_code::disconnected, "peripheral subgraphs require a connected graph");
    if (!is_bucolic(g)) fail(error_code::precondition, "peripheral subgraphs require a bucolic graph");

    const auto triples = find_gated_separators(g, bound);
    peripheral_report report;
    if (triples.empty()) {
        report.box = true;
        return report;
    }

    auto to_mask = [](const std::vector<int>& s) {
        std::uint64_t mask = 0;
        for (int v : s) mask |= std::uint64_t{1} << v;
        return mask;
    };
    std::vector<std::uint64_t> separator_masks;
    for (const auto& t : triples) separator_masks.push_back(to_mask(t.separator));

    // A stripped side is peripheral when it contains no separator of the whole
    // graph; keep the smallest separator per distinct stripped side.
    std::map<std::vector<int>, peripheral_part> best;
    auto consider = [&](const std::vector<int>& side, const std::vector<int>& separator,
                        const std::vector<int>& rest) {
        std::vector<int> stripped;
        std::set_difference(side.begin(), side.end(), separator.begin(), separator.end(),
                            std::back_inserter(stripped));
        const std::uint64_t stripped_mask = to_mask(stripped);
        for (std::uint64_t sep_mask : separator_masks)
            if ((sep_mask & ~stripped_mask) == 0) return;
        auto it = best.find(stripped);
        if (it == best.end()) {
            best.emplace(stripped, peripheral_part{stripped, separator, rest});
            return;
        }
        auto& kept = it->second;
        if (separator.size() < kept.separator.size() ||
            (separator.size() == kept.separator.size() && separator < kept.separator))
            kept = peripheral_part{stripped, separator, rest};
    };
    for (const auto& t : triples) {
        consider(t.side_a, t.separator, t.side_b);
        consider(t.side_b, t.separator, t.side_a);
    }
    for (auto& [stripped, part] : best) report.parts.push_back(std::move(part));
    return report;
}

int decomposition_tree::leaf_count() const {
    if (children.empty()) return 1;
    int total = 0;
    for (const auto& child : children) total += child.leaf_count();
    return total;
}

const char* to_string(decomposition_tree::node_kind k) {
    switch (k) {
        case decomposition_tree::node_kind::prime: return "prime";
        case decomposition_tree::node_kind::product: return "product";
        case decomposition_tree::node_kind::amalgam: return "amalgam";
    }
    return "?";
}

const char* to_string(decomposition_tree::prime_tag t) {
    switch (t) {
        case decomposition_tree::prime_tag::vertex: return "vertex";
        case decomposition_tree::prime_tag::edge: return "edge";
        case decomposition_tree::prime_tag::weakly_bridged: return "weakly-bridged";
        case decomposition_tree::prime_tag::bridged: return "bridged";
    }
    return "?";
}

namespace {

decomposition_tree make_prime_leaf(const graph& h) {
    decomposition_tree leaf;
    leaf.kind = decomposition_tree::node_kind::prime;
    leaf.g = h;
    if (h.vertex_count() == 1) {
        leaf.tag = decomposition_tree::prime_tag::vertex;
    } else if (h.vertex_count() == 2) {
        leaf.tag = decomposition_tree::prime_tag::edge;
    } else {
        if (!is_two_connected(h) || !is_weakly_bridged(h))
            fail(error_code::internal,
                 "prime part is neither an edge nor a two-connected weakly bridged graph");
        leaf.tag = is_bridged(h) ? decomposition_tree::prime_tag::bridged
                                 : decomposition_tree::prime_tag::weakly_bridged;
    }
    return leaf;
}

decomposition_tree decompose_rec(const graph& h, int bound) {
    if (h.vertex_count() <= 2) return make_prime_leaf(h);

    auto triples = find_gated_separators(h, bound);
    if (!triples.empty()) {
        // Split where the smaller side is smallest.
        const gated_separator* best = &triples[0];
        for (const auto& t : triples) {
            auto key = [](const gated_separator& s) {
                return std::tie(s.side_a, s.separator);
            };
            if (t.side_a.size() < best->side_a.size() ||
                (t.side_a.size() == best->side_a.size() && key(t) < key(*best)))
                best = &t;
        }
        decomposition_tree node;
        node.kind = decomposition_tree::node_kind::amalgam;
        node.g = h;
        node.separator = best->separator;
        std::vector<int> ids_a, ids_b;
        graph sub_a = h.induced(best->side_a, &ids_a);
        graph sub_b = h.induced(best->side_b, &ids_b);
        auto other = std::async(std::launch::async,
                                [&sub_b, bound] { return decompose_rec(sub_b, bound); });
        node.children.push_back(decompose_rec(sub_a, bound));
        node.children.push_back(other.get());
        node.child_maps.push_back(std::move(ids_a));
        node.child_maps.push_back(std::move(ids_b));
        return node;
    }

    auto factors = cartesian_prime_factorization(h);
    if (factors.size() >= 2) {
        decomposition_tree node;
        node.kind = decomposition_tree::node_kind::product;
        node.g = h;
        std::vector<std::future<decomposition_tree>> pending;
        for (std::size_t i = 1; i < factors.size(); ++i)
            pending.push_back(std::async(std::launch::async, [&factors, i, bound] {
                return decompose_rec(factors[i], bound);
            }));
        node.children.push_back(decompose_rec(factors[0], bound));
        for (auto& f : pending) node.children.push_back(f.get());
        return node;
    }

    return make_prime_leaf(h);
}

}  // namespace

decomposition_tree decompose_bucolic(const graph& g, int separator_bound) {
    if (!g.is_connected()) fail(error_code::disconnected, "decomposition requires a connected graph");
    if (!is_bucolic(g)) fail(error_code::precondition, "decomposition requires a bucolic graph");
    return decompose_rec(g, separator_bound);
}

namespace {

void note(decomposition_check& out, const std::string& where, const std::string& what) {
    out.ok = false;
    out.diagnostics.push_back(where + ": " + what);
}

void verify_node(const decomposition_tree& node, const std::string& where, decomposition_check& out) {
    const int n = node.g.vertex_count();
    switch (node.kind) {
        case decomposition_tree::node_kind::prime: {
            if (!node.children.empty()) note(out, where, "prime leaf has children");
            bool tag_ok = false;
            switch (node.tag) {
                case decomposition_tree::prime_tag::vertex:
                    tag_ok = n == 1;
                    break;
                case decomposition_tree::prime_tag::edge:
                    tag_ok = n == 2 && node.g.edge_count() == 1;
                    break;
                case decomposition_tree::prime_tag::weakly_bridged:
                    tag_ok = is_two_connected(node.g) && is_weakly_bridged(node.g);
                    break;
                case decomposition_tree::prime_tag::bridged:
                    tag_ok = is_two_connected(node.g) && is_bridged(node.g);
                    break;
            }
            if (!tag_ok)
                note(out, where,
                     std::string("prime leaf fails its '") + to_string(node.tag) + "' recognizer");
            return;
        }
        case decomposition_tree::node_kind::product: {
            if (node.children.size() < 2) {
                note(out, where, "product node needs at least two children");
                return;
            }
            for (std::size_t i = 0; i < node.children.size(); ++i)
                verify_node(node.children[i], where + ".children[" + std::to_string(i) + "]", out);
            graph rebuilt = node.children[0].g;
            for (std::size_t i = 1; i < node.children.size(); ++i)
                rebuilt = cartesian_product(rebuilt, node.children[i].g);
            if (!is_isomorphic(rebuilt, node.g))
                note(out, where, "product of the children is not isomorphic to the node graph");
            return;
        }
        case decomposition_tree::node_kind::amalgam: {
            if (node.children.size() != 2 || node.child_maps.size() != 2) {
                note(out, where, "amalgam node needs exactly two children with vertex maps");
                return;
            }
            for (std::size_t i = 0; i < 2; ++i)
                verify_node(node.children[i], where + ".children[" + std::to_string(i) + "]", out);

            std::vector<std::vector<int>> images(2);
            bool maps_ok = true;
            for (std::size_t i = 0; i < 2 && maps_ok; ++i) {
                const auto& map = node.child_maps[i];
                if (static_cast<int>(map.size()) != node.children[i].g.vertex_count()) {
                    note(out, where, "child map size differs from the child order");
                    maps_ok = false;
                    break;
                }
                std::set<int> seen;
                for (int target : map) {
                    if (target < 0 || target >= n || !seen.insert(target).second) {
                        note(out, where, "child map is not injective into the node graph");
                        maps_ok = false;
                        break;
                    }
                }
                images[i].assign(seen.begin(), seen.end());
            }
            if (!maps_ok) return;

            std::vector<int> covered, overlap;
            std::set_union(images[0].begin(), images[0].end(), images[1].begin(), images[1].end(),
                           std::back_inserter(covered));
            std::set_intersection(images[0].begin(), images[0].end(), images[1].begin(),
                                  images[1].end(), std::back_inserter(overlap));
            if (static_cast<int>(covered.size()) != n)
                note(out, where, "child images do not cover the node graph");
            std::vector<int> separator = node.separator;
            std::sort(separator.begin(), separator.end());
            if (overlap != separator)
                note(out, where,
                     "child overlap " + set_to_string(overlap) + " differs from the separator " +
                         set_to_string(separator));
            for (std::size_t i = 0; i < 2; ++i)
                if (images[i].size() <= separator.size())
                    note(out, where, "separator is not properly contained in both sides");

            std::set<std::pair<int, int>> rebuilt_edges;
            for (std::size_t i = 0; i < 2; ++i)
                for (auto [u, v] : node.children[i].g.edges()) {
                    int a = node.child_maps[i][u], b = node.child_maps[i][v];
                    rebuilt_edges.insert({std::min(a, b), std::max(a, b)});
                }
            const auto parent_edges = node.g.edges();
            if (!std::equal(parent_edges.begin(), parent_edges.end(), rebuilt_edges.begin(),
                            rebuilt_edges.end()))
                note(out, where, "recomposed edges differ from the node graph");
            else if (!is_gated(node.g, separator))
                note(out, where,
                     "separator " + set_to_string(separator) + " is not gated in the recomposed parent");
            return;
        }
    }
}

}  // namespace

decomposition_check verify_decomposition(const decomposition_tree& tree, const graph& g) {
    decomposition_check out;
    verify_node(tree, "root", out);
    if (!is_isomorphic(tree.g, g))
        note(out, "root", "decomposition graph is not isomorphic to the target graph");
    return out;
}

}  // namespace bucolic
