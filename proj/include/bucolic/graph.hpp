#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bucolic/errors.hpp"

namespace bucolic {

// Finite simple undirected graph on vertex ids 0..n-1.  Immutable after
// construction; shortest-path rows are memoized lazily behind a mutex.
class graph {
  public:
    graph() = default;
    graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list,
          std::vector<std::string> labels = {});
    // Copies and moves drop the memoized rows (the mutex is not shareable).
    graph(const graph& other);
    graph& operator=(const graph& other);
    graph(graph&& other) noexcept;
    graph& operator=(graph&& other) noexcept;

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int u) const;
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
    std::vector<int> common_neighbors(int u, int v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::string label(int u) const;
    bool has_labels() const { return !labels_.empty(); }

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    // -1 when v is unreachable from u.
    int distance(int u, int v) const;
    const std::vector<int>& distances_from(int u) const;
    std::vector<int> ball(int u, int radius) const;

    // Vertices x with d(u,x) + d(x,v) = d(u,v); requires u, v connected.
    std::vector<int> interval(int u, int v) const;

    // Subgraph induced by `vertices` (deduplicated, sorted).  When given,
    // `old_ids` receives the original id of each new vertex.
    graph induced(std::vector<int> vertices, std::vector<int>* old_ids = nullptr) const;

    void check_vertex(int u) const;

  private:
    const std::vector<int>& bfs_row(int u) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;

    // Bit-matrix adjacency, built only for small graphs.
    int mask_words_ = 0;
    std::vector<std::uint64_t> adj_bits_;

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::unique_ptr<std::vector<int>>> row_cache_;
};

// Connected, at least three vertices, and no cut vertex.
bool is_two_connected(const graph& g);
std::vector<int> cut_vertices(const graph& g);

graph cartesian_product(const graph& a, const graph& b);
graph strong_product(const graph& a, const graph& b);

graph path_graph(int k);
graph cycle_graph(int k);
graph complete_graph(int k);
graph complete_bipartite_graph(int a, int b);
graph hypercube_graph(int dim);
// Rim 0..k-1 in cyclic order, hub k adjacent to the whole rim.
graph wheel_graph(int k);
// Wheel with the single spoke {hub, 0} removed.
graph almost_wheel_graph(int k);
graph hamming_graph(const std::vector<int>& sizes);

}  // namespace bucolic
