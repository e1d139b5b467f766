#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bucolic/graph.hpp"

namespace bucolic {

// Two-dimensional cell complex over a graph: triangle cells plus cyclic
// square cells.  Cell sets are stored explicitly so that inputs whose cells
// do not match their skeleton can be diagnosed instead of silently completed.
class triangle_square_complex {
  public:
    triangle_square_complex() = default;
    // Validates each cell against the skeleton: triangles must be mutually
    // adjacent triples, squares induced 4-cycles in the given cyclic order.
    // Squares are canonicalized (lexicographic-least rotation/reflection) and
    // both cell lists are sorted and deduplicated.
    triangle_square_complex(graph skeleton, std::vector<std::array<int, 3>> triangles,
                            std::vector<std::array<int, 4>> squares);

    const graph& skeleton() const { return skeleton_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::array<int, 4>>& squares() const { return squares_; }

    bool has_triangle(int a, int b, int c) const;
    // Cyclic query: a-b-c-d in either orientation, any rotation.
    bool has_square(int a, int b, int c, int d) const;

    static std::array<int, 4> canonical_square(std::array<int, 4> cycle);

  private:
    graph skeleton_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 4>> squares_;
};

// All triangles and induced 4-cycles of g.
triangle_square_complex flag_complex(const graph& g);

struct flag_report {
    bool flag = false;
    std::vector<std::array<int, 3>> missing_triangles, extra_triangles;
    std::vector<std::array<int, 4>> missing_squares, extra_squares;
};
flag_report is_flag(const triangle_square_complex& x);

// Pairs of distinct cells whose intersection is not a common face (empty, one
// vertex, or one shared edge that is an edge of both cells).
struct cell_overlap {
    std::vector<int> cell_a, cell_b;
};
std::vector<cell_overlap> validate_cells(const triangle_square_complex& x);

// A failed condition instance; `tuples` holds the participating cells or
// vertex sets, in the order described by `condition`.
struct complex_witness {
    std::string condition;
    std::vector<std::vector<int>> tuples;
};

struct condition_check {
    bool ok = true;
    std::optional<complex_witness> witness;
};

// Any three square cells pairwise sharing an edge and jointly a vertex must
// sit inside an induced 3-cube of the skeleton.
condition_check cube_condition(const triangle_square_complex& x);
// Any triangle cell and square cell sharing an edge extend to a prism: a
// vertex adjacent to the three far corners, non-adjacent to the shared edge.
condition_check house_condition(const triangle_square_complex& x);
// No induced W4, and every induced extended 5-wheel has a vertex adjacent to
// all seven of its vertices.
condition_check w4_w5hat_condition(const triangle_square_complex& x);

// Bounded higher-dimensional analogues on a bare graph.
condition_check hypercube_condition_bounded(const graph& g, int kmax,
                                            long long work_budget = 2000000);
condition_check hyperhouse_condition_bounded(const graph& g,
                                             long long work_budget = 2000000);

struct local_conditions_report {
    bool flag = false;         // cells coincide with the flag completion
    bool well_formed = false;  // validate_cells found nothing
    bool w4_free = false;
    bool w5hat_ok = false;
    bool w5_free = false;  // informational, for the strong variant
    bool cube_ok = false;
    bool house_ok = false;
    std::vector<complex_witness> witnesses;

    // Gate for the cover construction.
    bool admissible() const {
        return flag && well_formed && w4_free && w5hat_ok && cube_ok && house_ok;
    }
};
local_conditions_report local_conditions(const triangle_square_complex& x);

enum class simply_connected_verdict { yes, no, budget_exceeded };
const char* to_string(simply_connected_verdict v);

// Decides simple connectivity by unfolding the universal cover until it
// stabilizes or outgrows the base.  Requires the local conditions to hold.
simply_connected_verdict is_simply_connected(const triangle_square_complex& x,
                                             int vertex_budget = 100000);

}  // namespace bucolic
