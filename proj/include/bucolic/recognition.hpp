#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bucolic/graph.hpp"
#include "bucolic/patterns.hpp"

namespace bucolic {

// A concrete failure of one of the two distance conditions, replayable
// against the graph.  `z` is -1 for the triangle condition.
struct condition_witness {
    std::string condition;  // "triangle" or "quadrangle"
    int u = -1;             // basepoint
    int v = -1, w = -1;     // the pair lacking a closer common neighbor
    int z = -1;             // middle vertex for the quadrangle condition
};

bool replay_condition_witness(const graph& g, const condition_witness& cw);

// Evidence for a negative class answer: either a distance-condition failure
// or an induced forbidden pattern on a concrete vertex set.
struct certificate {
    enum class kind { condition, forbidden_pattern };
    kind type = kind::condition;
    condition_witness witness;       // when type == condition
    pattern pat = pattern::c4;       // when type == forbidden_pattern
    std::vector<int> vertices;       // sorted occurrence set
};

bool replay_certificate(const graph& g, const certificate& c);
std::string describe(const graph& g, const certificate& c);

// Triangle condition at basepoint u: adjacent v, w equidistant from u admit a
// common neighbor one step closer to u.  Returns a violation witness or
// nothing.  The quadrangle variant covers pairs at distance two with a common
// neighbor one step farther from u.
std::optional<condition_witness> triangle_condition(const graph& g, int u);
std::optional<condition_witness> quadrangle_condition(const graph& g, int u);

// First violation over all basepoints, scanning components independently.
std::optional<condition_witness> weak_modularity_witness(const graph& g);
bool is_weakly_modular(const graph& g);

enum class graph_class {
    weakly_modular,
    pre_median,
    bucolic,
    strongly_bucolic,
    bridged,
    weakly_bridged,
};

const char* to_string(graph_class cls);

struct check_result {
    bool member = false;
    std::vector<certificate> certificates;  // empty iff member
};

// Decide membership; with `exhaustive` every forbidden-pattern occurrence is
// listed instead of the first one per pattern.
check_result check_class(const graph& g, graph_class cls, bool exhaustive = false);

struct class_report {
    bool weakly_modular = false;
    bool pre_median = false;
    bool bucolic = false;
    bool strongly_bucolic = false;
    bool bridged = false;
    bool weakly_bridged = false;
    std::vector<certificate> certificates;
    std::vector<std::pair<std::string, long long>> stage_micros;
};

class_report classify(const graph& g, bool exhaustive = false);

bool is_bucolic(const graph& g);
bool is_bridged(const graph& g);
bool is_weakly_bridged(const graph& g);

}  // namespace bucolic
