#include "graphlink/invariants.hpp"

#include <numeric>

#include "graphlink/error.hpp"

namespace graphlink {

namespace {

void require_knot(const Gf2Matrix& b) {
    if (determinant(b) != 1)
        throw Error(ErrorKind::NotAKnot, "det(A(G)+E) = 0; corank " + std::to_string(corank(b)) +
                                             " means the graph-link has more than one component");
}

int parity_sign(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

Gf2Matrix b_matrix(const LabeledGraph& g) { return adjacency_matrix(g) + Gf2Matrix::identity(g.size()); }

std::size_t component_count(const LabeledGraph& g) { return corank(b_matrix(g)) + 1; }

bool is_graph_knot(const LabeledGraph& g) { return determinant(b_matrix(g)) == 1; }

WritheReport writhe(const LabeledGraph& g) {
    const Gf2Matrix b = b_matrix(g);
    require_knot(b);
    WritheReport r;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const int w = parity_sign(corank(flip_diagonal_entry(b, i))) * g.vertex(i).sign;
        r.per_vertex.push_back(w);
        r.signs.push_back(g.vertex(i).sign);
        r.framings.push_back(g.vertex(i).framing);
    }
    r.total = std::accumulate(r.per_vertex.begin(), r.per_vertex.end(), 0);
    return r;
}

int writhe_via_minor(const LabeledGraph& g, std::size_t i) {
    if (i >= g.size())
        throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i) + " in a graph on " +
                                                    std::to_string(g.size()) + " vertices");
    const Gf2Matrix b = b_matrix(g);
    require_knot(b);
    return parity_sign(corank(delete_rows_cols(b, {i})) + 1) * g.vertex(i).sign;
}

}  // namespace graphlink
