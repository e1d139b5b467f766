#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bucolic/complex.hpp"
#include "bucolic/graph.hpp"

namespace bucolic {

// A finite group of automorphisms given as explicit vertex permutations,
// closed under composition; the identity is always element 0.
struct group_action {
    graph g;
    std::vector<std::vector<int>> elements;

    int order() const { return static_cast<int>(elements.size()); }
};

// Full automorphism group by backtracking over distance-profile classes,
// parallelized over the image of the first vertex.  Refuses groups larger
// than `cap`.
group_action automorphisms(const graph& g, long long cap = 100000);

// Closure of the generators under composition.  Every generator must be an
// automorphism; the closure is refused beyond `cap` elements.
group_action group_closure(const graph& g, const std::vector<std::vector<int>>& generators,
                           long long cap = 100000);

// Checks that every element is a permutation of g's vertices preserving
// adjacency and that the identity is present; throws otherwise.
void validate_group_action(const graph& g, const group_action& f);

std::vector<int> orbit_of(const group_action& f, int v);
std::vector<std::vector<int>> orbits(const group_action& f);

// Convex hull of the orbit of v: an F-invariant subgraph that inherits every
// class condition from g.  Requires g bucolic.
std::vector<int> invariant_bucolic_subgraph(const graph& g, const group_action& f, int v);

// F-invariant gated box inside a bucolic graph: strip the union of all
// peripheral subgraphs and repeat until no gated separator remains.
std::vector<int> invariant_box(const graph& g, const group_action& f);

// An induced subgraph that is a product of cliques, described by its vertex
// set and the axis cliques through its least vertex.  Notes record fallbacks
// taken while producing it.
struct prism_witness {
    std::vector<int> vertices;
    std::vector<std::vector<int>> factor_cliques;
    std::vector<std::string> notes;

    int base() const { return vertices.empty() ? -1 : vertices.front(); }
};

// Re-verifies the Hamming structure of `vertices`, the axis cliques, and
// setwise F-invariance.
bool verify_prism_witness(const graph& g, const group_action& f, const prism_witness& w);

// F-invariant prism in a box with edge or two-connected weakly bridged
// factors: dismantle whole dominated orbits in the strong product of the
// factors down to an invariant clique, then span it by a prism.  A dismantling
// stall falls back to the brute-force search and is recorded in the notes.
prism_witness invariant_prism(const graph& gbox, const group_action& f);

// Oracle: every F-invariant vertex set inducing a product of cliques, sorted
// by size then lexicographically.  Scans all 2^n subsets; refuses beyond
// `budget`.
std::vector<prism_witness> brute_force_invariant_prism(const graph& g, const group_action& f,
                                                       long long budget = 100000);

// Full pipeline: smallest orbit hull to a fixpoint, then the invariant box
// inside it, then the invariant prism of the box.  The fixed point is the
// barycenter of the prism with uniform weights.
struct fixed_prism_result {
    prism_witness prism;
    std::vector<int> invariant_set;
    std::vector<int> box;
    std::vector<std::pair<int, double>> center;
};

fixed_prism_result fixed_prism(const graph& g, const group_action& f);
// Complex overload: elements must also map triangles to triangles and squares
// to squares before the graph pipeline runs on the skeleton.
fixed_prism_result fixed_prism(const triangle_square_complex& x, const group_action& f);

}  // namespace bucolic
