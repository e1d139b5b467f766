#pragma once

#include <string>
#include <vector>

#include "bucolic/graph.hpp"

namespace bucolic {

// Prime factors of a connected graph with respect to the Cartesian product,
// via the transitive closure of the distance relation on edges together with
// the no-common-chordless-square relation on incident edges.  The product of
// the returned factors is rebuilt and checked against g before returning.
std::vector<graph> cartesian_prime_factorization(const graph& g);

// Factors plus the position of every vertex inside each factor:
// coordinates[v][j] is v's vertex in factors[j].  The coordinate map is a
// verified isomorphism onto the product of the factors.
struct factorization {
    std::vector<graph> factors;
    std::vector<std::vector<int>> coordinates;
};
factorization cartesian_factorization(const graph& g);

// A gated set whose removal splits the rest, together with one two-sided
// cover: side_a and side_b are gated, overlap exactly in the separator, and
// jointly exhaust the graph.  side_a is never the larger side.
struct gated_separator {
    std::vector<int> separator;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// Exhaustive enumeration over vertex subsets; refuses graphs above `bound`
// vertices.  Sorted by separator size, then lexicographically.
std::vector<gated_separator> find_gated_separators(const graph& g, int bound = 24);

// One peripheral part: a side with its separator removed that contains no
// gated separator of the whole graph, per the minimum-size side argument.
struct peripheral_part {
    std::vector<int> peripheral;  // U = side minus separator
    std::vector<int> separator;
    std::vector<int> rest;  // the complementary side, separator included
};

struct peripheral_report {
    bool box = false;  // no gated separator anywhere: the graph is a box
    std::vector<peripheral_part> parts;
};
peripheral_report peripheral_subgraphs(const graph& g, int bound = 24);

// Amalgam/product/prime decomposition tree.  Amalgam children carry maps from
// child vertex ids back into this node's graph; product children are factor
// graphs in their own id spaces.
struct decomposition_tree {
    enum class node_kind { prime, product, amalgam };
    enum class prime_tag { vertex, edge, weakly_bridged, bridged };

    node_kind kind = node_kind::prime;
    graph g;
    prime_tag tag = prime_tag::vertex;
    std::vector<decomposition_tree> children;
    std::vector<int> separator;                // amalgam: ids in g
    std::vector<std::vector<int>> child_maps;  // amalgam: child id -> id in g

    int leaf_count() const;
};

const char* to_string(decomposition_tree::node_kind k);
const char* to_string(decomposition_tree::prime_tag t);

// Splits along a minimum-side gated separator when one exists, otherwise
// factorizes, otherwise classifies the graph as a prime leaf.
decomposition_tree decompose_bucolic(const graph& g, int separator_bound = 24);

// Bottom-up recomposition with a real isomorphism check at every node, leaf
// recognizers re-run, and separator gatedness re-verified in the recomposed
// parent.
struct decomposition_check {
    bool ok = true;
    std::vector<std::string> diagnostics;
};
decomposition_check verify_decomposition(const decomposition_tree& tree, const graph& g);

}  // namespace bucolic
