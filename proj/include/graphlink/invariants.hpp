#pragma once

#include <cstddef>
#include <vector>

#include "graphlink/gf2_matrix.hpp"
#include "graphlink/graph.hpp"

namespace graphlink {

struct WritheReport {
    std::vector<int> per_vertex;  // w_i, each +1 or -1
    int total = 0;
    std::vector<int> signs;
    std::vector<int> framings;
};

/// B(G) = A(G) + E.
[[nodiscard]] Gf2Matrix b_matrix(const LabeledGraph& g);

/// corank(A(G) + E) + 1.
[[nodiscard]] std::size_t component_count(const LabeledGraph& g);

/// det(A(G) + E) = 1.
[[nodiscard]] bool is_graph_knot(const LabeledGraph& g);

/// w_i = (-1)^{corank(A + E + E_ii)} sign(v_i). Throws NotAKnot on a multi-component graph-link.
[[nodiscard]] WritheReport writhe(const LabeledGraph& g);

/// The same number through the principal minor with row and column i removed:
/// w_i = (-1)^{corank(B with i deleted) + 1} sign(v_i).
[[nodiscard]] int writhe_via_minor(const LabeledGraph& g, std::size_t i);

}  // namespace graphlink
