#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bucolic/complex.hpp"
#include "bucolic/cover.hpp"
#include "bucolic/graph.hpp"
#include "bucolic/symmetry.hpp"

namespace bucolic {

enum class document_format { edge_list, structured };

// On-disk graph description: one label per vertex id plus an edge list, with
// optional cells and an optional list of group generators.  Cells and groups
// are expressible only in the structured format; the edge-list format is the
// hand-writable one.  Edge order is preserved verbatim so that parsing a
// serialized document gives the document back unchanged.
struct graph_document {
    document_format format = document_format::edge_list;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    bool has_cells = false;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> squares;
    bool has_group = false;
    std::vector<std::vector<int>> group;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    bool identity_labels() const;

    graph to_graph() const;
    // Explicit cells when the document carries any, flag completion otherwise.
    triangle_square_complex to_complex() const;
    // Closure of the listed generators; requires a group field.
    group_action to_action(long long cap = 100000) const;

    bool operator==(const graph_document&) const = default;
};

graph_document document_from_graph(const graph& g);

// Edge-list text unless the first non-space character opens a structured
// document ('{' or '[').  Syntax errors carry 1-based line and column
// positions.
graph_document parse_document(const std::string& text);
std::string serialize_document(const graph_document& doc);

// Stable DOT renderings: vertices in id order, edges lexicographically.
std::string to_dot(const graph& g);
// Cover vertices are labeled "level.class(image)" where class numbers the
// vertex within its level.
std::string cover_to_dot(const cover_state& st);

std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t value);

}  // namespace bucolic
