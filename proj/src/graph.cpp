#include "bucolic/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bucolic {

namespace {
constexpr int kMatrixCap = 4096;  // adjacency bits and row memoization cutoff
}

graph::graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
    if (n_ < 0) fail(error_code::invalid_argument, "vertex count must be nonnegative");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        fail(error_code::invalid_argument, "label count does not match vertex count");
    adj_.assign(n_, {});
    std::vector<std::set<int>> nb(n_);
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            fail(error_code::invalid_argument, "edge endpoint out of range");
        if (u == v) fail(error_code::invalid_argument, "self-loops are not allowed");
        nb[u].insert(v);
        nb[v].insert(u);
    }
    for (int u = 0; u < n_; ++u) {
        adj_[u].assign(nb[u].begin(), nb[u].end());
        edge_count_ += static_cast<int>(adj_[u].size());
    }
    edge_count_ /= 2;
    if (n_ > 0 && n_ <= kMatrixCap) {
        mask_words_ = (n_ + 63) / 64;
        adj_bits_.assign(static_cast<std::size_t>(n_) * mask_words_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                adj_bits_[static_cast<std::size_t>(u) * mask_words_ + v / 64] |=
                    std::uint64_t{1} << (v % 64);
    }
    row_cache_.resize(n_ <= kMatrixCap ? n_ : 0);
}

graph::graph(const graph& other)
    : n_(other.n_), edge_count_(other.edge_count_), adj_(other.adj_),
      labels_(other.labels_), mask_words_(other.mask_words_), adj_bits_(other.adj_bits_) {
    row_cache_.resize(n_ > 0 && n_ <= kMatrixCap ? n_ : 0);
}

graph& graph::operator=(const graph& other) {
    if (this == &other) return *this;
    n_ = other.n_;
    edge_count_ = other.edge_count_;
    adj_ = other.adj_;
    labels_ = other.labels_;
    mask_words_ = other.mask_words_;
    adj_bits_ = other.adj_bits_;
    row_cache_.clear();
    row_cache_.resize(n_ > 0 && n_ <= kMatrixCap ? n_ : 0);
    return *this;
}

graph::graph(graph&& other) noexcept
    : n_(other.n_), edge_count_(other.edge_count_), adj_(std::move(other.adj_)),
      labels_(std::move(other.labels_)), mask_words_(other.mask_words_),
      adj_bits_(std::move(other.adj_bits_)) {
    row_cache_.resize(n_ > 0 && n_ <= kMatrixCap ? n_ : 0);
    other.n_ = 0;
    other.edge_count_ = 0;
    other.mask_words_ = 0;
    other.row_cache_.clear();
}

graph& graph::operator=(graph&& other) noexcept {
    if (this == &other) return *this;
    n_ = other.n_;
    edge_count_ = other.edge_count_;
    adj_ = std::move(other.adj_);
    labels_ = std::move(other.labels_);
    mask_words_ = other.mask_words_;
    adj_bits_ = std::move(other.adj_bits_);
    row_cache_.clear();
    row_cache_.resize(n_ > 0 && n_ <= kMatrixCap ? n_ : 0);
    other.n_ = 0;
    other.edge_count_ = 0;
    other.mask_words_ = 0;
    other.row_cache_.clear();
    return *this;
}

void graph::check_vertex(int u) const {
    if (u < 0 || u >= n_)
        fail(error_code::invalid_argument,
             "vertex id " + std::to_string(u) + " out of range [0," + std::to_string(n_) + ")");
}

bool graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (mask_words_ > 0)
        return (adj_bits_[static_cast<std::size_t>(u) * mask_words_ + v / 64] >>
                (v % 64)) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& graph::neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
}

std::vector<int> graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    std::vector<int> out;
    std::set_intersection(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                          std::back_inserter(out));
    return out;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string graph::label(int u) const {
    check_vertex(u);
    if (!labels_.empty()) return labels_[u];
    return std::to_string(u);
}

const std::vector<int>& graph::bfs_row(int u) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!row_cache_.empty() && row_cache_[u]) return *row_cache_[u];
    }
    auto row = std::make_unique<std::vector<int>>(n_, -1);
    (*row)[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj_[x])
            if ((*row)[y] < 0) {
                (*row)[y] = (*row)[x] + 1;
                queue.push_back(y);
            }
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (row_cache_.empty()) {
        // Large graph: no memoization; park the row in a single-slot cache.
        row_cache_.resize(1);
        row_cache_[0] = std::move(row);
        return *row_cache_[0];
    }
    if (!row_cache_[u]) row_cache_[u] = std::move(row);
    return *row_cache_[u];
}

const std::vector<int>& graph::distances_from(int u) const {
    check_vertex(u);
    return bfs_row(u);
}

int graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return bfs_row(u)[v];
}

std::vector<int> graph::ball(int u, int radius) const {
    check_vertex(u);
    if (radius < 0) fail(error_code::invalid_argument, "radius must be nonnegative");
    const auto& row = bfs_row(u);
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (row[x] >= 0 && row[x] <= radius) out.push_back(x);
    return out;
}

bool graph::is_connected() const {
    if (n_ == 0) return true;
    const auto& row = bfs_row(0);
    return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> graph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int y : adj_[comp[i]])
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> graph::interval(int u, int v) const {
    int d = distance(u, v);
    if (d < 0)
        fail(error_code::precondition, "interval endpoints lie in different components");
    const auto& from_u = bfs_row(u);
    const auto& from_v = bfs_row(v);
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (from_u[x] >= 0 && from_v[x] >= 0 && from_u[x] + from_v[x] == d) out.push_back(x);
    return out;
}

graph graph::induced(std::vector<int> vertices, std::vector<int>* old_ids) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) check_vertex(v);
    std::vector<int> map(n_, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) map[vertices[i]] = i;
    std::vector<std::pair<int, int>> edge_list;
    for (int v : vertices)
        for (int w : adj_[v])
            if (v < w && map[w] >= 0) edge_list.emplace_back(map[v], map[w]);
    std::vector<std::string> labels;
    if (!labels_.empty())
        for (int v : vertices) labels.push_back(labels_[v]);
    if (old_ids) *old_ids = vertices;
    return graph(static_cast<int>(vertices.size()), edge_list, std::move(labels));
}

std::vector<int> cut_vertices(const graph& g) {
    std::vector<int> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<int> rest;
        for (int x = 0; x < n; ++x)
            if (x != v) rest.push_back(x);
        if (rest.empty()) continue;
        graph h = g.induced(rest);
        if (static_cast<int>(h.components().size()) >
            static_cast<int>(g.components().size()))
            out.push_back(v);
    }
    return out;
}

bool is_two_connected(const graph& g) {
    return g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).empty();
}

namespace {

graph product(const graph& a, const graph& b, bool strong) {
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<std::pair<int, int>> edge_list;
    auto id = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            for (int y2 : b.neighbors(y))
                if (y2 > y) edge_list.emplace_back(id(x, y), id(x, y2));
            for (int x2 : a.neighbors(x))
                if (x2 > x) {
                    edge_list.emplace_back(id(x, y), id(x2, y));
                    if (strong)
                        for (int y2 : b.neighbors(y)) edge_list.emplace_back(id(x, y), id(x2, y2));
                }
        }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(na) * nb);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    return graph(na * nb, edge_list, std::move(labels));
}

}  // namespace

graph cartesian_product(const graph& a, const graph& b) { return product(a, b, false); }
graph strong_product(const graph& a, const graph& b) { return product(a, b, true); }

graph path_graph(int k) {
    if (k < 1) fail(error_code::invalid_argument, "path needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return graph(k, e);
}

graph cycle_graph(int k) {
    if (k < 3) fail(error_code::invalid_argument, "cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return graph(k, e);
}

graph complete_graph(int k) {
    if (k < 1) fail(error_code::invalid_argument, "complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return graph(k, e);
}

graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) fail(error_code::invalid_argument, "both sides must be nonempty");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return graph(a + b, e);
}

graph hypercube_graph(int dim) {
    if (dim < 0 || dim > 20) fail(error_code::invalid_argument, "hypercube dimension out of range");
    int n = 1 << dim;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < dim; ++bit)
            if (!(u & (1 << bit))) e.emplace_back(u, u | (1 << bit));
    return graph(n, e);
}

graph wheel_graph(int k) {
    if (k < 3) fail(error_code::invalid_argument, "wheel rim needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return graph(k + 1, e);
}

graph almost_wheel_graph(int k) {
    if (k < 3) fail(error_code::invalid_argument, "wheel rim needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        if (i != 0) e.emplace_back(i, k);
    }
    return graph(k + 1, e);
}

graph hamming_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) fail(error_code::invalid_argument, "hamming graph needs at least one factor");
    graph g = complete_graph(sizes.front());
    for (std::size_t i = 1; i < sizes.size(); ++i)
        g = cartesian_product(g, complete_graph(sizes[i]));
    return g;
}

}  // namespace bucolic
