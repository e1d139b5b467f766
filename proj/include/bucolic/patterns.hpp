#pragma once

#include <optional>
#include <vector>

#include "bucolic/graph.hpp"

namespace bucolic {

// Small reference graphs whose induced presence or absence drives the
// recognizers and the complex-side conditions.
enum class pattern {
    k23,
    c4,
    c5,
    w4,
    w5,
    almost_w4,     // 4-wheel with one spoke removed
    extended_w5,   // 5-wheel plus one extra vertex seeing two consecutive rim vertices
    house,         // square glued to a triangle along one edge
    twin_house,    // two houses sharing a triangle edge
    double_house,  // triangle with two squares attached across two of its edges
    cogwheel,      // three squares fanned around a common center
    prism,         // K3 x K2
    double_prism,  // two prisms glued along a square
};

const char* to_string(pattern p);
graph pattern_graph(pattern p);

// All induced occurrences of `pat` in `host`, as sorted vertex sets without
// duplicates, in lexicographic order.  With `first_only` the search stops at
// the first occurrence found.
std::vector<std::vector<int>> find_induced(const graph& host, const graph& pat,
                                           bool first_only = false);

// One induced embedding as a map pattern-vertex -> host-vertex, if any.
std::optional<std::vector<int>> find_induced_embedding(const graph& host, const graph& pat);

bool contains_induced(const graph& host, pattern p);

// Map a-vertex -> b-vertex realizing an isomorphism, if one exists.
std::optional<std::vector<int>> isomorphism(const graph& a, const graph& b);
bool is_isomorphic(const graph& a, const graph& b);

}  // namespace bucolic
