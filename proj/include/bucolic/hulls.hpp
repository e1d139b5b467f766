#pragma once

#include <optional>
#include <vector>

#include "bucolic/graph.hpp"

namespace bucolic {

enum class hull_kind { convex, gated, triangle_gated };

// Closure result with its full round-by-round trace: rounds.front() is the
// (sorted, deduplicated) input set, every later entry lists the vertices first
// added in that round.  `vertices` is the union.
struct hull_result {
    hull_kind kind = hull_kind::convex;
    std::vector<int> vertices;
    std::vector<std::vector<int>> rounds;
};

bool is_convex(const graph& g, const std::vector<int>& set);

// Unique vertex of `set` lying on a shortest path from x to every vertex of
// `set`, when it exists.
std::optional<int> gate(const graph& g, const std::vector<int>& set, int x);
bool is_gated(const graph& g, const std::vector<int>& set);

// Smallest convex superset: interval closure to a fixpoint.
hull_result convex_hull(const graph& g, const std::vector<int>& seed);

// Smallest gated superset, computed as the joint fixpoint of interval closure
// and adding common neighbors of inside pairs at distance at most two.  The
// fixpoint is checked to be gated.
hull_result gated_hull(const graph& g, const std::vector<int>& seed);

// Gated hull of a triangle by repeated twin-ball growth: add every vertex with
// at least two neighbors inside until nothing changes.
hull_result gated_hull_of_triangle(const graph& g, const std::vector<int>& triangle);

// Recompute the closure named by `result.kind` from its seed and compare the
// trace round for round.
bool replay_hull(const graph& g, const hull_result& result);

// fibers[i] lists the vertices whose gate is set[i]; requires `set` gated and
// the graph connected.
std::vector<std::vector<int>> fibers(const graph& g, const std::vector<int>& set);

// Every fiber of every nonempty gated set is itself gated.  Exact subset scan;
// refuses graphs above `bound` vertices.
bool is_fiber_complemented(const graph& g, int bound = 16);

}  // namespace bucolic
