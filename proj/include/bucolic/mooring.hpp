#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bucolic/graph.hpp"

namespace bucolic {

// Rooted shortest-path tree given as a father map: father[base] = base, and
// every other father is a neighbor one step closer to the base.
struct mooring {
    int base = -1;
    std::vector<int> father;
};

// Throws when the father map breaks the mooring invariants.
void validate_mooring(const graph& g, const mooring& m);

// BFS parents with an id-ordered queue; deterministic.
mooring bfs_mooring(const graph& g, int u);

// LexBFS from u (labels compared by visit position, ties to the smallest id);
// each father is the LexBFS-earliest neighbor closer to u.
mooring lexbfs_mooring(const graph& g, int u);

// Checks that for every edge, the two father chains stay within distance one
// at equal depth.  `edge` names the first violating edge when not ok.
struct combing_result {
    bool ok = true;
    std::pair<int, int> edge = {-1, -1};
};
combing_result verify_combing(const graph& g, const mooring& m);

// Greedy elimination of dominated vertices (closed neighborhood inside
// another's), smallest id first; nothing when the graph is not dismantlable.
std::optional<std::vector<int>> dismantling_order(const graph& g);

}  // namespace bucolic
