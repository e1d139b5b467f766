#include "bucolic.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bucolic/complex.hpp"
#include "bucolic/cover.hpp"
#include "bucolic/decompose.hpp"
#include "bucolic/errors.hpp"
#include "bucolic/graph.hpp"
#include "bucolic/hulls.hpp"
#include "bucolic/io.hpp"
#include "bucolic/mooring.hpp"
#include "bucolic/recognition.hpp"
#include "bucolic/symmetry.hpp"

using nlohmann::ordered_json;

struct bucolic_document {
    bucolic::graph_document doc;
};

struct bucolic_graph {
    bucolic::graph g;
};

namespace {

thread_local std::string last_error_message;

bucolic_status map_code(bucolic::error_code code) {
    switch (code) {
        case bucolic::error_code::invalid_argument: return BUCOLIC_INVALID_ARGUMENT;
        case bucolic::error_code::parse_error: return BUCOLIC_PARSE_ERROR;
        case bucolic::error_code::disconnected: return BUCOLIC_DISCONNECTED;
        case bucolic::error_code::precondition: return BUCOLIC_PRECONDITION;
        case bucolic::error_code::bound_exceeded: return BUCOLIC_BOUND_EXCEEDED;
        case bucolic::error_code::budget_exceeded: return BUCOLIC_BUDGET_EXCEEDED;
        case bucolic::error_code::cap_exceeded: return BUCOLIC_CAP_EXCEEDED;
        case bucolic::error_code::not_automorphism: return BUCOLIC_NOT_AUTOMORPHISM;
        case bucolic::error_code::internal: return BUCOLIC_INTERNAL;
    }
    return BUCOLIC_INTERNAL;
}

template <typename Fn>
bucolic_status guarded(Fn&& fn) {
    try {
        fn();
        return BUCOLIC_OK;
    } catch (const bucolic::error& e) {
        last_error_message = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        last_error_message = e.what();
        return BUCOLIC_INTERNAL;
    } catch (...) {
        last_error_message = "unknown failure";
        return BUCOLIC_INTERNAL;
    }
}

void require(const void* pointer, const char* what) {
    if (!pointer) bucolic::fail(bucolic::error_code::invalid_argument,
                                std::string(what) + " must not be null");
}

char* copy_out(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

ordered_json certificate_json(const bucolic::graph& g, const bucolic::certificate& c) {
    ordered_json j;
    if (c.type == bucolic::certificate::kind::condition) {
        j["kind"] = "condition";
        j["condition"] = c.witness.condition;
        j["basepoint"] = c.witness.u;
        j["v"] = c.witness.v;
        j["w"] = c.witness.w;
        if (c.witness.z >= 0) j["z"] = c.witness.z;
    } else {
        j["kind"] = "forbidden-pattern";
        j["pattern"] = to_string(c.pat);
        j["vertices"] = c.vertices;
    }
    j["description"] = describe(g, c);
    return j;
}

std::optional<bucolic::graph_class> class_by_name(const std::string& name) {
    using bucolic::graph_class;
    if (name == "weakly-modular") return graph_class::weakly_modular;
    if (name == "pre-median") return graph_class::pre_median;
    if (name == "bucolic") return graph_class::bucolic;
    if (name == "strongly-bucolic") return graph_class::strongly_bucolic;
    if (name == "bridged") return graph_class::bridged;
    if (name == "weakly-bridged") return graph_class::weakly_bridged;
    return std::nullopt;
}

ordered_json tree_json(const bucolic::decomposition_tree& t) {
    ordered_json j;
    j["kind"] = to_string(t.kind);
    j["vertex_count"] = t.g.vertex_count();
    if (t.kind == bucolic::decomposition_tree::node_kind::prime) j["tag"] = to_string(t.tag);
    if (t.kind == bucolic::decomposition_tree::node_kind::amalgam) j["separator"] = t.separator;
    if (!t.child_maps.empty()) j["child_maps"] = t.child_maps;
    if (!t.children.empty()) {
        j["children"] = ordered_json::array();
        for (const auto& child : t.children) j["children"].push_back(tree_json(child));
    }
    return j;
}

std::vector<int> parse_int_list(const char* params, const char* what) {
    std::vector<int> out;
    std::string text = params ? params : "";
    std::size_t i = 0;
    auto skip_spaces = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_spaces();
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start)
            bucolic::fail(bucolic::error_code::invalid_argument,
                          std::string(what) + ": expected a comma-separated integer list");
        out.push_back(std::stoi(text.substr(start, i - start)));
        skip_spaces();
        if (i < text.size()) {
            if (text[i] != ',')
                bucolic::fail(bucolic::error_code::invalid_argument,
                              std::string(what) + ": expected a comma-separated integer list");
            ++i;
            skip_spaces();
            if (i == text.size())
                bucolic::fail(bucolic::error_code::invalid_argument,
                              std::string(what) + ": trailing comma");
        }
    }
    return out;
}

bucolic::graph generate_graph(const std::string& family, const std::vector<int>& params) {
    auto arity = [&](std::size_t expected) {
        if (params.size() != expected)
            bucolic::fail(bucolic::error_code::invalid_argument,
                          "family " + family + " takes " + std::to_string(expected) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "path") return arity(1), bucolic::path_graph(params[0]);
    if (family == "cycle") return arity(1), bucolic::cycle_graph(params[0]);
    if (family == "complete") return arity(1), bucolic::complete_graph(params[0]);
    if (family == "complete-bipartite")
        return arity(2), bucolic::complete_bipartite_graph(params[0], params[1]);
    if (family == "hypercube") return arity(1), bucolic::hypercube_graph(params[0]);
    if (family == "wheel") return arity(1), bucolic::wheel_graph(params[0]);
    if (family == "almost-wheel") return arity(1), bucolic::almost_wheel_graph(params[0]);
    if (family == "hamming") {
        if (params.empty())
            bucolic::fail(bucolic::error_code::invalid_argument,
                          "family hamming takes at least one size");
        return bucolic::hamming_graph(params);
    }
    bucolic::fail(bucolic::error_code::invalid_argument,
                  "unknown family \"" + family +
                      "\"; families: path, cycle, complete, complete-bipartite, hypercube, "
                      "wheel, almost-wheel, hamming");
}

std::string condition_failure(const bucolic::condition_witness& w) {
    std::string name = w.condition == "triangle" ? "TC" : "QC";
    return "graph not weakly modular: " + name + "(" + std::to_string(w.u) + ") fails at (" +
           std::to_string(w.v) + ", " + std::to_string(w.w) + ")";
}

}  // namespace

extern "C" {

const char* bucolic_version(void) { return "0.1.0"; }

const char* bucolic_last_error(void) { return last_error_message.c_str(); }

void bucolic_string_free(char* text) { std::free(text); }

uint64_t bucolic_text_hash(const char* text) {
    return bucolic::fnv1a64(text ? std::string_view(text) : std::string_view());
}

bucolic_status bucolic_document_parse(const char* text, bucolic_document** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new bucolic_document{bucolic::parse_document(text)};
    });
}

bucolic_status bucolic_document_generate(const char* family, const char* params,
                                         bucolic_document** out) {
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        auto g = generate_graph(family, parse_int_list(params, "params"));
        // Canonical generator output: plain numeric ids, even for product
        // families whose construction labels vertices by coordinates.
        *out = new bucolic_document{
            bucolic::document_from_graph(bucolic::graph(g.vertex_count(), g.edges()))};
    });
}

bucolic_status bucolic_document_serialize(const bucolic_document* doc, int structured,
                                          char** out) {
    return guarded([&] {
        require(doc, "doc");
        require(out, "out");
        auto copy = doc->doc;
        if (structured) copy.format = bucolic::document_format::structured;
        *out = copy_out(bucolic::serialize_document(copy));
    });
}

void bucolic_document_free(bucolic_document* doc) { delete doc; }

int bucolic_document_vertex_count(const bucolic_document* doc) {
    return doc ? doc->doc.vertex_count() : 0;
}

int bucolic_document_edge_count(const bucolic_document* doc) {
    return doc ? static_cast<int>(doc->doc.edges.size()) : 0;
}

int bucolic_document_has_cells(const bucolic_document* doc) {
    return doc && doc->doc.has_cells ? 1 : 0;
}

int bucolic_document_has_group(const bucolic_document* doc) {
    return doc && doc->doc.has_group ? 1 : 0;
}

bucolic_status bucolic_graph_create(int vertex_count, const int* edge_pairs, int edge_count,
                                    bucolic_graph** out) {
    return guarded([&] {
        require(out, "out");
        if (edge_count < 0)
            bucolic::fail(bucolic::error_code::invalid_argument,
                          "edge count must be nonnegative");
        if (edge_count > 0) require(edge_pairs, "edge_pairs");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < edge_count; ++i)
            edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        *out = new bucolic_graph{bucolic::graph(vertex_count, edges)};
    });
}

bucolic_status bucolic_graph_from_document(const bucolic_document* doc, bucolic_graph** out) {
    return guarded([&] {
        require(doc, "doc");
        require(out, "out");
        *out = new bucolic_graph{doc->doc.to_graph()};
    });
}

void bucolic_graph_free(bucolic_graph* g) { delete g; }

int bucolic_graph_vertex_count(const bucolic_graph* g) { return g ? g->g.vertex_count() : 0; }

int bucolic_graph_edge_count(const bucolic_graph* g) { return g ? g->g.edge_count() : 0; }

int bucolic_graph_adjacent(const bucolic_graph* g, int u, int v) {
    if (!g) return 0;
    if (u < 0 || v < 0 || u >= g->g.vertex_count() || v >= g->g.vertex_count()) return 0;
    return g->g.adjacent(u, v) ? 1 : 0;
}

bucolic_status bucolic_graph_to_dot(const bucolic_graph* g, char** out) {
    return guarded([&] {
        require(g, "g");
        require(out, "out");
        *out = copy_out(bucolic::to_dot(g->g));
    });
}

bucolic_status bucolic_check(const bucolic_graph* g, const char* class_name, int exhaustive,
                             char** out_json) {
    return guarded([&] {
        require(g, "g");
        require(class_name, "class_name");
        require(out_json, "out_json");
        std::string name = class_name;
        ordered_json j;
        if (name == "all") {
            auto report = bucolic::classify(g->g, exhaustive != 0);
            j["mode"] = "all";
            j["classes"]["weakly-modular"] = report.weakly_modular;
            j["classes"]["pre-median"] = report.pre_median;
            j["classes"]["bucolic"] = report.bucolic;
            j["classes"]["strongly-bucolic"] = report.strongly_bucolic;
            j["classes"]["bridged"] = report.bridged;
            j["classes"]["weakly-bridged"] = report.weakly_bridged;
            j["member"] = report.bucolic;
            j["certificates"] = ordered_json::array();
            for (const auto& c : report.certificates)
                j["certificates"].push_back(certificate_json(g->g, c));
            j["stage_micros"] = report.stage_micros;
        } else {
            auto cls = class_by_name(name);
            if (!cls)
                bucolic::fail(bucolic::error_code::invalid_argument,
                              "unknown class \"" + name +
                                  "\"; classes: all, bucolic, bridged, weakly-bridged, "
                                  "strongly-bucolic, pre-median, weakly-modular");
            auto result = bucolic::check_class(g->g, *cls, exhaustive != 0);
            j["mode"] = "class";
            j["class"] = to_string(*cls);
            j["member"] = result.member;
            j["certificates"] = ordered_json::array();
            for (const auto& c : result.certificates)
                j["certificates"].push_back(certificate_json(g->g, c));
        }
        *out_json = copy_out(j.dump(2));
    });
}

bucolic_status bucolic_hull(const bucolic_graph* g, const char* kind, const int* set,
                            int set_length, char** out_json) {
    return guarded([&] {
        require(g, "g");
        require(kind, "kind");
        require(out_json, "out_json");
        if (set_length < 0)
            bucolic::fail(bucolic::error_code::invalid_argument,
                          "set length must be nonnegative");
        if (set_length > 0) require(set, "set");
        std::vector<int> seed(set, set + set_length);
        std::string name = kind;
        bucolic::hull_result result;
        try {
            if (name == "convex") {
                result = bucolic::convex_hull(g->g, seed);
            } else if (name == "gated") {
                result = bucolic::gated_hull(g->g, seed);
            } else if (name == "triangle-gated") {
                result = bucolic::gated_hull_of_triangle(g->g, seed);
            } else {
                bucolic::fail(bucolic::error_code::invalid_argument,
                              "unknown hull kind \"" + name +
                                  "\"; kinds: convex, gated, triangle-gated");
            }
        } catch (const bucolic::error& e) {
            // A non-gated fixpoint on a non-weakly-modular graph is an input
            // problem, not a library one; name the failing condition.
            if (e.code() == bucolic::error_code::internal) {
                if (auto w = bucolic::weak_modularity_witness(g->g))
                    bucolic::fail(bucolic::error_code::precondition, condition_failure(*w));
            }
            throw;
        }
        ordered_json j;
        j["kind"] = name;
        j["seed"] = result.rounds.empty() ? std::vector<int>{} : result.rounds.front();
        j["vertices"] = result.vertices;
        j["rounds"] = result.rounds;
        *out_json = copy_out(j.dump(2));
    });
}

bucolic_status bucolic_cover(const bucolic_document* doc, int basepoint, int radius, int budget,
                             int emit_dot, char** out_json) {
    return guarded([&] {
        require(doc, "doc");
        require(out_json, "out_json");
        auto x = doc->doc.to_complex();
        std::optional<int> radius_opt;
        if (radius >= 0) radius_opt = radius;
        int vertex_budget = budget > 0 ? budget : 100000;
        auto result = bucolic::unfold(x, basepoint, radius_opt, vertex_budget);

        const auto& base = result.state.base.skeleton();
        bool mismatch = false;
        ordered_json growth = ordered_json::array();
        for (int level = 0; level <= result.state.top_level(); ++level) {
            int cover_ball = result.state.level_end[level];
            int base_ball = static_cast<int>(base.ball(basepoint, level).size());
            growth.push_back({{"radius", level},
                              {"cover_ball", cover_ball},
                              {"base_ball", base_ball}});
            if (cover_ball != base_ball) mismatch = true;
        }

        ordered_json j;
        j["basepoint"] = basepoint;
        j["verdict"] = to_string(result.verdict);
        j["growth"] = growth;
        j["cover_vertices"] = result.state.cover.vertex_count();
        if (mismatch)
            j["simply_connected"] = false;
        else if (result.verdict == bucolic::unfold_verdict::stabilized)
            j["simply_connected"] = result.state.cover.vertex_count() == base.vertex_count();
        else
            j["simply_connected"] = nullptr;
        if (emit_dot) j["dot"] = bucolic::cover_to_dot(result.state);
        *out_json = copy_out(j.dump(2));
    });
}

bucolic_status bucolic_decompose(const bucolic_graph* g, char** out_json) {
    return guarded([&] {
        require(g, "g");
        require(out_json, "out_json");
        auto tree = bucolic::decompose_bucolic(g->g);
        auto check = bucolic::verify_decomposition(tree, g->g);
        ordered_json j;
        j["tree"] = tree_json(tree);
        j["leaves"] = tree.leaf_count();
        j["verified"] = check.ok;
        j["diagnostics"] = check.diagnostics;
        *out_json = copy_out(j.dump(2));
    });
}

bucolic_status bucolic_moor(const bucolic_graph* g, int base, const char* method,
                            char** out_json) {
    return guarded([&] {
        require(g, "g");
        require(method, "method");
        require(out_json, "out_json");
        std::string name = method;
        bucolic::mooring m;
        if (name == "bfs") {
            m = bucolic::bfs_mooring(g->g, base);
        } else if (name == "lexbfs") {
            m = bucolic::lexbfs_mooring(g->g, base);
        } else {
            bucolic::fail(bucolic::error_code::invalid_argument,
                          "unknown method \"" + name + "\"; methods: bfs, lexbfs");
        }
        auto combing = bucolic::verify_combing(g->g, m);
        ordered_json j;
        j["base"] = m.base;
        j["method"] = name;
        j["father"] = m.father;
        j["combing_ok"] = combing.ok;
        if (!combing.ok) j["violating_edge"] = {combing.edge.first, combing.edge.second};
        *out_json = copy_out(j.dump(2));
    });
}

bucolic_status bucolic_fixprism(const bucolic_document* doc, int budget, char** out_json) {
    return guarded([&] {
        require(doc, "doc");
        require(out_json, "out_json");
        long long cap = budget > 0 ? budget : 100000;
        auto g = doc->doc.to_graph();
        auto f = doc->doc.to_action(cap);
        auto result = doc->doc.has_cells ? bucolic::fixed_prism(doc->doc.to_complex(), f)
                                         : bucolic::fixed_prism(g, f);
        if (!bucolic::verify_prism_witness(g, f, result.prism))
            bucolic::fail(bucolic::error_code::internal,
                          "fixed prism failed its own witness check");

        std::string cross_check = "skipped";
        if (g.vertex_count() <= 12) {
            try {
                auto oracle = bucolic::brute_force_invariant_prism(g, f, cap);
                cross_check = "failed";
                for (const auto& w : oracle) {
                    bool minimal = true;
                    for (const auto& other : oracle)
                        if (other.vertices.size() < w.vertices.size() &&
                            std::includes(w.vertices.begin(), w.vertices.end(),
                                          other.vertices.begin(), other.vertices.end()))
                            minimal = false;
                    if (minimal && std::includes(result.prism.vertices.begin(),
                                                 result.prism.vertices.end(),
                                                 w.vertices.begin(), w.vertices.end())) {
                        cross_check = "ok";
                        break;
                    }
                }
            } catch (const bucolic::error& e) {
                if (e.code() != bucolic::error_code::budget_exceeded) throw;
            }
        }
        if (cross_check == "failed")
            bucolic::fail(bucolic::error_code::internal,
                          "fixed prism misses every minimal invariant prism");

        ordered_json j;
        j["group_order"] = f.order();
        j["invariant_set"] = result.invariant_set;
        j["box"] = result.box;
        j["prism"]["vertices"] = result.prism.vertices;
        j["prism"]["base"] = result.prism.base();
        j["prism"]["factor_cliques"] = result.prism.factor_cliques;
        j["prism"]["notes"] = result.prism.notes;
        ordered_json center = ordered_json::array();
        for (const auto& [v, weight] : result.center) center.push_back({{"vertex", v}, {"weight", weight}});
        j["center"] = center;
        j["cross_check"] = cross_check;
        *out_json = copy_out(j.dump(2));
    });
}

}  // extern "C"
