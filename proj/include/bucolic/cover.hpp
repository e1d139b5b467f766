#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bucolic/complex.hpp"
#include "bucolic/graph.hpp"

namespace bucolic {

// One vertex of the unfolded cover.  Vertices added at level >= 2 are classes
// of couples (parent cover id, base vertex); level-1 vertices carry the single
// couple (basepoint, image) and the basepoint carries none.
struct cover_vertex {
    int level = 0;
    int image = -1;  // base vertex this cover vertex projects to
    std::vector<std::pair<int, int>> couples;
};

// Ball-by-ball unfolding of the universal cover of a complex from a basepoint.
// Cover ids are assigned level by level; within a level, classes are ordered
// by their lexicographically least couple.
struct cover_state {
    triangle_square_complex base;
    int basepoint = -1;
    graph cover;
    std::vector<cover_vertex> vertices;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<int> level_end;  // level_end[j] = number of cover vertices within radius j

    int top_level() const { return static_cast<int>(level_end.size()) - 1; }
    int level_begin(int j) const { return j == 0 ? 0 : level_end[j - 1]; }
    int image_of(int cover_id) const { return vertices[cover_id].image; }
};

// Builds the radius-1 cover (the basepoint's closed ball in the skeleton).
// Requires a connected skeleton and a complex passing all local conditions;
// the first failing condition is named in the error.
cover_state init_cover(const triangle_square_complex& x, int basepoint);

// Grows the cover by one level.  Returns false (and leaves the state
// unchanged) when the previous level produced no new vertices, i.e. the cover
// is complete.
bool extend_cover(cover_state& st);

// Exhaustive re-check of the construction invariants on the current state:
// levels are exactly the basepoint's balls, the basepoint satisfies both
// distance conditions, unit balls below the frontier project isomorphically
// onto base balls, base squares on projected edges lift, and the projection
// is locally injective on the frontier.
struct cover_check_report {
    bool balls_ok = false;
    bool basepoint_conditions_ok = false;
    bool interior_balls_ok = false;
    bool squares_lift_ok = false;
    bool frontier_faithful_ok = false;
    std::vector<std::string> failures;

    bool all_ok() const {
        return balls_ok && basepoint_conditions_ok && interior_balls_ok && squares_lift_ok &&
               frontier_faithful_ok;
    }
};
cover_check_report verify_level(const cover_state& st);

enum class unfold_verdict { stabilized, radius_reached, budget_exceeded };
const char* to_string(unfold_verdict v);

struct unfold_result {
    cover_state state;
    triangle_square_complex cover_complex;  // flag completion of the cover graph
    unfold_verdict verdict = unfold_verdict::stabilized;
    std::vector<int> growth;  // ball sizes per level
};

// Unfolds until stabilization, until `radius` levels when given, or until the
// vertex budget is exceeded.  With `verify`, every level is re-checked and
// interior cover vertices are asserted to have the same star of cells as
// their projections.
unfold_result unfold(const triangle_square_complex& x, int basepoint,
                     std::optional<int> radius = std::nullopt, int vertex_budget = 100000,
                     bool verify = true);

}  // namespace bucolic
