// Command-line front end; all analysis goes through the C API in bucolic.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bucolic.h"

using json = nlohmann::ordered_json;

namespace {

struct context {
    bool json_mode = false;
    std::string command_line;
};

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

void guard(bucolic_status status) {
    if (status != BUCOLIC_OK) die(bucolic_last_error());
}

std::string take_string(char* owned) {
    std::string out = owned ? owned : "";
    bucolic_string_free(owned);
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) die("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string hash_hex(const std::string& text) {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(bucolic_text_hash(text.c_str())));
    return out;
}

// Self-describing structured output: tool, version, command, input hash.
void emit_envelope(const context& ctx, const std::string& input_text, const json& report) {
    json envelope;
    envelope["tool"] = "bucolic";
    envelope["version"] = bucolic_version();
    envelope["command"] = ctx.command_line;
    envelope["input_hash"] = "fnv1a64:" + hash_hex(input_text);
    envelope["report"] = report;
    std::cout << envelope.dump(2) << "\n";
}

bucolic_document* parse_input(const std::string& text) {
    bucolic_document* doc = nullptr;
    guard(bucolic_document_parse(text.c_str(), &doc));
    return doc;
}

bucolic_graph* graph_of(const bucolic_document* doc) {
    bucolic_graph* g = nullptr;
    guard(bucolic_graph_from_document(doc, &g));
    return g;
}

// Vertex labels via the structured serialization; identity ids give an empty
// list and callers fall back to the id itself.
std::vector<std::string> labels_of(const bucolic_document* doc) {
    char* text = nullptr;
    guard(bucolic_document_serialize(doc, 1, &text));
    auto j = json::parse(take_string(text));
    std::vector<std::string> labels;
    if (j["vertices"].is_array())
        for (const auto& entry : j["vertices"]) labels.push_back(entry.get<std::string>());
    return labels;
}

std::string name_of(const std::vector<std::string>& labels, int v) {
    if (v >= 0 && v < static_cast<int>(labels.size())) return labels[v];
    return std::to_string(v);
}

std::string set_string(const std::vector<std::string>& labels, const json& vertices) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : vertices) {
        if (!first) out += ", ";
        out += name_of(labels, v.get<int>());
        first = false;
    }
    return out + "}";
}

std::string id_list(const json& vertices) {
    std::string out;
    for (const auto& v : vertices) {
        if (!out.empty()) out += " ";
        out += std::to_string(v.get<int>());
    }
    return out;
}

json run_check(const bucolic_graph* g, const std::string& class_name, bool exhaustive) {
    char* out = nullptr;
    guard(bucolic_check(g, class_name.c_str(), exhaustive ? 1 : 0, &out));
    return json::parse(take_string(out));
}

void print_certificates(const json& report) {
    for (const auto& certificate : report["certificates"])
        std::cout << "certificate: " << certificate["description"].get<std::string>() << "\n";
}

int cmd_check(const context& ctx, const std::string& input, const std::string& class_name,
              bool exhaustive) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    bucolic_graph* g = graph_of(doc);
    auto report = run_check(g, class_name, exhaustive);
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else if (report["mode"] == "all") {
        for (const auto& [name, member] : report["classes"].items())
            std::cout << name << ": " << (member.get<bool>() ? "yes" : "no") << "\n";
        print_certificates(report);
    } else {
        std::cout << report["class"].get<std::string>() << ": "
                  << (report["member"].get<bool>() ? "yes" : "no") << "\n";
        print_certificates(report);
    }
    bool member = report["member"].get<bool>();
    bucolic_graph_free(g);
    bucolic_document_free(doc);
    return member ? 0 : 1;
}

int cmd_hull(const context& ctx, const std::string& input, const std::string& kind,
             const std::vector<int>& set) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    bucolic_graph* g = graph_of(doc);
    char* out = nullptr;
    guard(bucolic_hull(g, kind.c_str(), set.data(), static_cast<int>(set.size()), &out));
    auto report = json::parse(take_string(out));
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else {
        std::cout << "hull (" << kind << "): " << id_list(report["vertices"]) << "\n";
        int round = 0;
        for (const auto& added : report["rounds"]) {
            std::cout << "round " << round++ << ": " << id_list(added) << "\n";
        }
    }
    bucolic_graph_free(g);
    bucolic_document_free(doc);
    return 0;
}

int cmd_cover(const context& ctx, const std::string& input, int base, int radius, int budget,
              const std::string& emit) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    char* out = nullptr;
    guard(bucolic_cover(doc, base, radius, budget, emit == "dot" ? 1 : 0, &out));
    auto report = json::parse(take_string(out));
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else if (emit == "dot") {
        std::cout << report["dot"].get<std::string>();
    } else {
        for (const auto& level : report["growth"])
            std::cout << "r=" << level["radius"].get<int>() << ": "
                      << level["cover_ball"].get<int>() << "\n";
        std::cout << "verdict: " << report["verdict"].get<std::string>() << "\n";
        const auto& sc = report["simply_connected"];
        std::cout << "simply-connected: "
                  << (sc.is_null() ? "unknown" : sc.get<bool>() ? "yes" : "no") << "\n";
    }
    bool refuted = report["simply_connected"].is_boolean() &&
                   !report["simply_connected"].get<bool>();
    bucolic_document_free(doc);
    return refuted ? 1 : 0;
}

void print_tree(const json& node, int depth) {
    std::string line(static_cast<std::size_t>(2 * depth), ' ');
    line += node["kind"].get<std::string>();
    if (node.contains("tag")) line += "[" + node["tag"].get<std::string>() + "]";
    line += " (" + std::to_string(node["vertex_count"].get<int>()) + " vertices)";
    if (node.contains("separator")) line += " separator=" + set_string({}, node["separator"]);
    std::cout << line << "\n";
    if (node.contains("children"))
        for (const auto& child : node["children"]) print_tree(child, depth + 1);
}

int cmd_decompose(const context& ctx, const std::string& input) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    bucolic_graph* g = graph_of(doc);
    auto membership = run_check(g, "bucolic", false);
    if (!membership["member"].get<bool>()) {
        if (ctx.json_mode) {
            emit_envelope(ctx, text, membership);
        } else {
            std::cout << "bucolic: no\n";
            print_certificates(membership);
        }
        bucolic_graph_free(g);
        bucolic_document_free(doc);
        return 1;
    }
    char* out = nullptr;
    guard(bucolic_decompose(g, &out));
    auto report = json::parse(take_string(out));
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else {
        print_tree(report["tree"], 0);
        std::cout << "leaves: " << report["leaves"].get<int>() << "\n";
        std::cout << "verified: " << (report["verified"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& diagnostic : report["diagnostics"])
            std::cout << "diagnostic: " << diagnostic.get<std::string>() << "\n";
    }
    int status = report["verified"].get<bool>() ? 0 : 2;
    bucolic_graph_free(g);
    bucolic_document_free(doc);
    return status;
}

int cmd_moor(const context& ctx, const std::string& input, int base,
             const std::string& method) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    bucolic_graph* g = graph_of(doc);
    char* out = nullptr;
    guard(bucolic_moor(g, base, method.c_str(), &out));
    auto report = json::parse(take_string(out));
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else {
        std::cout << "base: " << report["base"].get<int>() << "\n";
        std::cout << "method: " << method << "\n";
        const auto& father = report["father"];
        for (std::size_t v = 0; v < father.size(); ++v)
            std::cout << v << ": " << father[v].get<int>() << "\n";
        if (report["combing_ok"].get<bool>()) {
            std::cout << "combing: pass\n";
        } else {
            std::cout << "combing: fail (edge " << report["violating_edge"][0].get<int>()
                      << "-" << report["violating_edge"][1].get<int>() << ")\n";
        }
    }
    bucolic_graph_free(g);
    bucolic_document_free(doc);
    return 0;
}

int cmd_fixprism(const context& ctx, const std::string& input, int budget) {
    auto text = read_input(input);
    bucolic_document* doc = parse_input(text);
    auto labels = labels_of(doc);
    char* out = nullptr;
    guard(bucolic_fixprism(doc, budget, &out));
    auto report = json::parse(take_string(out));
    if (ctx.json_mode) {
        emit_envelope(ctx, text, report);
    } else {
        std::cout << "prism: " << set_string(labels, report["prism"]["vertices"]) << "\n";
        std::string factors;
        for (const auto& clique : report["prism"]["factor_cliques"]) {
            if (!factors.empty()) factors += " x ";
            factors += set_string(labels, clique);
        }
        std::cout << "factor cliques: " << factors << "\n";
        std::cout << "invariant set: " << set_string(labels, report["invariant_set"]) << "\n";
        std::cout << "box: " << set_string(labels, report["box"]) << "\n";
        std::string center;
        for (const auto& entry : report["center"]) {
            if (!center.empty()) center += " ";
            std::ostringstream weight;
            weight << entry["weight"].get<double>();
            center += name_of(labels, entry["vertex"].get<int>()) + ":" + weight.str();
        }
        std::cout << "center: " << center << "\n";
        std::cout << "invariance: verified under " << report["group_order"].get<int>()
                  << " group elements\n";
        std::cout << "cross-check: " << report["cross_check"].get<std::string>() << "\n";
        for (const auto& note : report["prism"]["notes"])
            std::cout << "note: " << note.get<std::string>() << "\n";
    }
    bucolic_document_free(doc);
    return 0;
}

int cmd_gen(bool structured, const std::string& family,
            const std::vector<std::string>& params) {
    std::string joined;
    for (const auto& p : params) {
        if (!joined.empty()) joined += ",";
        joined += p;
    }
    bucolic_document* doc = nullptr;
    guard(bucolic_document_generate(family.c_str(), joined.c_str(), &doc));
    char* out = nullptr;
    guard(bucolic_document_serialize(doc, structured ? 1 : 0, &out));
    std::cout << take_string(out);
    bucolic_document_free(doc);
    return 0;
}

// Priority: explicit flag, then BUCOLIC_BUDGET, then the library default.
int budget_or_env(int flag_value) {
    if (flag_value > 0) return flag_value;
    const char* env = std::getenv("BUCOLIC_BUDGET");
    if (!env) return 0;
    try {
        std::size_t used = 0;
        int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        die("BUCOLIC_BUDGET must be a positive integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bucolic graph toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bucolic_version());

    context ctx;
    app.add_flag("--json", ctx.json_mode, "structured report output");
    {
        std::string joined;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) joined += " ";
            joined += argv[i];
        }
        ctx.command_line = joined;
    }

    std::string input = "-";
    std::string class_name = "all";
    bool exhaustive = false;
    auto* check = app.add_subcommand("check", "decide class membership with certificates");
    check->add_option("input", input, "graph document path, - for stdin");
    check->add_option("--class", class_name, "graph class to decide")
        ->check(CLI::IsMember({"all", "bucolic", "bridged", "weakly-bridged",
                               "strongly-bucolic", "pre-median"}));
    check->add_flag("--exhaustive", exhaustive, "list every forbidden-pattern occurrence");

    std::string hull_kind = "gated";
    std::vector<int> hull_set;
    auto* hull = app.add_subcommand("hull", "closure of a vertex set with its trace");
    hull->add_option("input", input, "graph document path, - for stdin");
    hull->add_option("--set", hull_set, "seed vertex ids")->delimiter(',')->required();
    hull->add_option("--kind", hull_kind, "closure kind")
        ->check(CLI::IsMember({"convex", "gated", "triangle-gated"}));

    int cover_base = 0;
    int cover_radius = -1;
    int cover_budget = 0;
    std::string cover_emit = "stats";
    auto* cover = app.add_subcommand("cover", "unfold the universal cover from a basepoint");
    cover->add_option("input", input, "graph document path, - for stdin");
    cover->add_option("--base", cover_base, "basepoint vertex id");
    cover->add_option("--radius", cover_radius, "stop after this many levels");
    cover->add_option("--budget", cover_budget, "cover vertex budget");
    cover->add_option("--emit", cover_emit, "output form")
        ->check(CLI::IsMember({"stats", "dot"}));

    auto* decompose = app.add_subcommand("decompose", "amalgam/product decomposition tree");
    decompose->add_option("input", input, "graph document path, - for stdin");

    int moor_base = 0;
    std::string moor_method = "bfs";
    auto* moor = app.add_subcommand("moor", "shortest-path tree with the combing check");
    moor->add_option("input", input, "graph document path, - for stdin");
    moor->add_option("--base", moor_base, "root vertex id")->required();
    moor->add_option("--method", moor_method, "tree construction")
        ->check(CLI::IsMember({"bfs", "lexbfs"}));

    auto* fixprism =
        app.add_subcommand("fixprism", "group-invariant prism of a bucolic graph");
    fixprism->add_option("input", input, "graph document with a group field, - for stdin");

    std::string gen_family;
    std::vector<std::string> gen_params;
    bool gen_structured = false;
    auto* gen = app.add_subcommand("gen", "emit a generator document");
    gen->add_option("family", gen_family, "graph family")->required();
    gen->add_option("params", gen_params, "integer parameters");
    gen->add_flag("--structured", gen_structured, "emit the structured format");

    for (auto* sub : {check, hull, cover, decompose, moor, fixprism, gen})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep the 0/1/2 exit contract: help and version are successes,
        // anything else is an error.
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*check) return cmd_check(ctx, input, class_name, exhaustive);
    if (*hull) return cmd_hull(ctx, input, hull_kind, hull_set);
    if (*cover)
        return cmd_cover(ctx, input, cover_base, cover_radius, budget_or_env(cover_budget),
                         cover_emit);
    if (*decompose) return cmd_decompose(ctx, input);
    if (*moor) return cmd_moor(ctx, input, moor_base, moor_method);
    if (*fixprism) return cmd_fixprism(ctx, input, budget_or_env(0));
    if (*gen) return cmd_gen(gen_structured || ctx.json_mode, gen_family, gen_params);
    return 2;
}
