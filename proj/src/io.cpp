#include "bucolic/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bucolic {

namespace {

[[noreturn]] void parse_fail(int line, int column, const std::string& message) {
    fail(error_code::parse_error, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + message);
}

// Canonical nonnegative decimal that fits an int: no sign, no leading zeros.
// Anything else is treated as an opaque label token.
bool canonical_number(std::string_view token, int* value = nullptr) {
    if (token.empty()) return false;
    if (token.size() > 1 && token.front() == '0') return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), parsed);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return false;
    if (value) *value = parsed;
    return true;
}

struct token {
    std::string text;
    int line = 0;    // 1-based
    int column = 0;  // 1-based
};

// Tokens of one line, comments stripped.
std::vector<token> tokenize_line(const std::string& line, int line_number) {
    std::vector<token> out;
    for (std::size_t i = 0; i < line.size();) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), line_number, static_cast<int>(start) + 1});
    }
    return out;
}

std::pair<int, int> offset_to_position(const std::string& text, std::size_t offset) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

graph_document parse_edge_list(const std::string& text) {
    std::vector<std::vector<token>> lines;
    {
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            auto tokens = tokenize_line(line, number);
            if (!tokens.empty()) lines.push_back(std::move(tokens));
        }
    }

    bool has_header = false;
    int declared = 0;
    std::vector<std::array<token, 2>> edge_tokens;
    for (const auto& tokens : lines) {
        if (tokens.front().text == "vertices:") {
            if (!edge_tokens.empty())
                parse_fail(tokens.front().line, tokens.front().column,
                           "vertex count header must come before the edges");
            if (has_header)
                parse_fail(tokens.front().line, tokens.front().column,
                           "duplicate vertex count header");
            if (tokens.size() != 2 || !canonical_number(tokens[1].text, &declared))
                parse_fail(tokens.front().line, tokens.front().column,
                           "expected \"vertices: <count>\"");
            has_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            const auto& at = tokens.size() > 2 ? tokens[2] : tokens.front();
            parse_fail(at.line, at.column, "expected two vertex ids per edge line");
        }
        edge_tokens.push_back({tokens[0], tokens[1]});
    }

    graph_document doc;
    doc.format = document_format::edge_list;

    const token* first_label = nullptr;
    for (const auto& [a, b] : edge_tokens) {
        if (!canonical_number(a.text) && !first_label) first_label = &a;
        if (!canonical_number(b.text) && !first_label) first_label = &b;
    }

    if (!first_label) {
        int max_id = -1;
        for (const auto& [a, b] : edge_tokens) {
            int u = 0, v = 0;
            canonical_number(a.text, &u);
            canonical_number(b.text, &v);
            if (has_header && u >= declared)
                parse_fail(a.line, a.column, "vertex id " + a.text + " outside vertices: " +
                                                 std::to_string(declared));
            if (has_header && v >= declared)
                parse_fail(b.line, b.column, "vertex id " + b.text + " outside vertices: " +
                                                 std::to_string(declared));
            if (u == v) parse_fail(a.line, a.column, "self-loops are not allowed");
            max_id = std::max({max_id, u, v});
            doc.edges.emplace_back(u, v);
        }
        int n = has_header ? declared : max_id + 1;
        for (int i = 0; i < n; ++i) doc.labels.push_back(std::to_string(i));
        return doc;
    }

    if (has_header)
        parse_fail(first_label->line, first_label->column,
                   "non-numeric vertex label under a vertices: header");
    std::vector<std::string> order;
    auto id_of = [&order](const std::string& label) {
        auto it = std::find(order.begin(), order.end(), label);
        if (it != order.end()) return static_cast<int>(it - order.begin());
        order.push_back(label);
        return static_cast<int>(order.size()) - 1;
    };
    for (const auto& [a, b] : edge_tokens) {
        int u = id_of(a.text), v = id_of(b.text);
        if (u == v) parse_fail(a.line, a.column, "self-loops are not allowed");
        doc.edges.emplace_back(u, v);
    }
    doc.labels = std::move(order);
    return doc;
}

[[noreturn]] void structured_fail(const std::string& message) {
    fail(error_code::parse_error, "structured document: " + message);
}

int int_entry(const nlohmann::json& value, int bound, const std::string& where) {
    if (!value.is_number_integer()) structured_fail(where + " must be an integer");
    auto raw = value.get<long long>();
    if (raw < 0 || raw >= bound)
        structured_fail(where + ": vertex id " + std::to_string(raw) + " out of range");
    return static_cast<int>(raw);
}

graph_document parse_structured(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = offset_to_position(text, e.byte > 0 ? e.byte - 1 : 0);
        parse_fail(line, column, "malformed structured document");
    }
    if (!j.is_object()) structured_fail("top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "vertices" && key != "edges" && key != "triangles" && key != "squares" &&
            key != "group")
            structured_fail("unknown field \"" + key + "\"");
    }
    if (!j.contains("vertices")) structured_fail("missing field \"vertices\"");

    graph_document doc;
    doc.format = document_format::structured;
    const auto& vertices = j["vertices"];
    if (vertices.is_number_integer()) {
        auto n = vertices.get<long long>();
        if (n < 0) structured_fail("vertex count must be nonnegative");
        for (long long i = 0; i < n; ++i) doc.labels.push_back(std::to_string(i));
    } else if (vertices.is_array()) {
        for (const auto& entry : vertices) {
            if (!entry.is_string()) structured_fail("vertex labels must be strings");
            doc.labels.push_back(entry.get<std::string>());
        }
    } else {
        structured_fail("\"vertices\" must be a count or a label array");
    }

    const int n = doc.vertex_count();
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) structured_fail("\"edges\" must be an array");
        for (const auto& entry : j["edges"]) {
            if (!entry.is_array() || entry.size() != 2)
                structured_fail("each edge must be a pair of vertex ids");
            int u = int_entry(entry[0], n, "edges");
            int v = int_entry(entry[1], n, "edges");
            if (u == v) structured_fail("self-loops are not allowed");
            doc.edges.emplace_back(u, v);
        }
    }
    if (j.contains("triangles")) {
        if (!j["triangles"].is_array()) structured_fail("\"triangles\" must be an array");
        doc.has_cells = true;
        for (const auto& entry : j["triangles"]) {
            if (!entry.is_array() || entry.size() != 3)
                structured_fail("each triangle must list three vertex ids");
            doc.triangles.push_back({int_entry(entry[0], n, "triangles"),
                                     int_entry(entry[1], n, "triangles"),
                                     int_entry(entry[2], n, "triangles")});
        }
    }
    if (j.contains("squares")) {
        if (!j["squares"].is_array()) structured_fail("\"squares\" must be an array");
        doc.has_cells = true;
        for (const auto& entry : j["squares"]) {
            if (!entry.is_array() || entry.size() != 4)
                structured_fail("each square must list four vertex ids in cyclic order");
            doc.squares.push_back(
                {int_entry(entry[0], n, "squares"), int_entry(entry[1], n, "squares"),
                 int_entry(entry[2], n, "squares"), int_entry(entry[3], n, "squares")});
        }
    }
    if (j.contains("group")) {
        if (!j["group"].is_array()) structured_fail("\"group\" must be an array");
        doc.has_group = true;
        for (const auto& entry : j["group"]) {
            if (!entry.is_array() || static_cast<int>(entry.size()) != n)
                structured_fail("each group element must list an image for every vertex");
            std::vector<int> perm;
            for (const auto& image : entry) perm.push_back(int_entry(image, n, "group"));
            doc.group.push_back(std::move(perm));
        }
    }
    return doc;
}

bool edge_list_safe_label(const std::string& label) {
    if (label.empty() || label == "vertices:") return false;
    for (char c : label)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
    return true;
}

std::string serialize_edge_list(const graph_document& doc) {
    if (doc.has_cells || doc.has_group)
        fail(error_code::invalid_argument,
             "cells and groups need the structured format");
    std::ostringstream out;
    if (doc.identity_labels()) {
        out << "vertices: " << doc.vertex_count() << "\n";
        for (const auto& [u, v] : doc.edges) out << u << " " << v << "\n";
        return out.str();
    }

    bool all_numeric = true;
    std::set<std::string> seen;
    for (const auto& label : doc.labels) {
        if (!edge_list_safe_label(label))
            fail(error_code::invalid_argument,
                 "label \"" + label + "\" is not edge-list safe; use the structured format");
        if (!seen.insert(label).second)
            fail(error_code::invalid_argument,
                 "duplicate label \"" + label + "\"; use the structured format");
        if (!canonical_number(label)) all_numeric = false;
    }
    if (all_numeric)
        fail(error_code::invalid_argument,
             "numeric labels must equal the vertex ids; use the structured format");

    // Parsing assigns ids by first appearance, so ids must already be in
    // appearance order and every vertex must occur in some edge.
    int next = 0;
    std::vector<bool> introduced(doc.labels.size(), false);
    for (const auto& [u, v] : doc.edges)
        for (int x : {u, v})
            if (!introduced[x]) {
                if (x != next)
                    fail(error_code::invalid_argument,
                         "vertex ids are not in label appearance order; use the structured "
                         "format");
                introduced[x] = true;
                ++next;
            }
    if (next != doc.vertex_count())
        fail(error_code::invalid_argument,
             "isolated labeled vertices need the structured format");
    for (const auto& [u, v] : doc.edges) out << doc.labels[u] << " " << doc.labels[v] << "\n";
    return out.str();
}

std::string serialize_structured(const graph_document& doc) {
    nlohmann::ordered_json j;
    if (doc.identity_labels())
        j["vertices"] = doc.vertex_count();
    else
        j["vertices"] = doc.labels;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : doc.edges) j["edges"].push_back({u, v});
    if (doc.has_cells) {
        j["triangles"] = doc.triangles;
        j["squares"] = doc.squares;
    }
    if (doc.has_group) j["group"] = doc.group;
    return j.dump(2) + "\n";
}

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

bool graph_document::identity_labels() const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels[i] != std::to_string(i)) return false;
    return true;
}

graph graph_document::to_graph() const {
    if (identity_labels()) return graph(vertex_count(), edges);
    return graph(vertex_count(), edges, labels);
}

triangle_square_complex graph_document::to_complex() const {
    if (has_cells) return triangle_square_complex(to_graph(), triangles, squares);
    return flag_complex(to_graph());
}

group_action graph_document::to_action(long long cap) const {
    if (!has_group)
        fail(error_code::invalid_argument, "document carries no group");
    return group_closure(to_graph(), group, cap);
}

graph_document document_from_graph(const graph& g) {
    graph_document doc;
    bool identity = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        doc.labels.push_back(g.label(v));
        if (doc.labels.back() != std::to_string(v)) identity = false;
    }
    doc.edges = g.edges();
    doc.format = identity ? document_format::edge_list : document_format::structured;
    return doc;
}

graph_document parse_document(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{' || c == '[') return parse_structured(text);
        break;
    }
    return parse_edge_list(text);
}

std::string serialize_document(const graph_document& doc) {
    return doc.format == document_format::edge_list ? serialize_edge_list(doc)
                                                    : serialize_structured(doc);
}

std::string to_dot(const graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string cover_to_dot(const cover_state& st) {
    std::ostringstream out;
    out << "graph cover {\n";
    for (int c = 0; c < st.cover.vertex_count(); ++c) {
        int level = st.vertices[c].level;
        int cls = c - st.level_begin(level);
        out << "  " << c << " [label=\"" << level << "." << cls << "("
            << st.vertices[c].image << ")\"];\n";
    }
    auto edges = st.edge_list;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, value >>= 4) out[i] = digits[value & 0xf];
    return out;
}

}  // namespace bucolic
