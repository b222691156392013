#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphlink/gf2_matrix.hpp"

namespace graphlink {

/// Vertex of a graph-link representative: framing in {0,1}, sign in {+1,-1}.
struct LabeledVertex {
    std::string name;
    int framing = 0;
    int sign = 1;

    friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

/// Vertex of a looped interlacement graph. Loops are a flag, never a self-edge.
struct LoopedVertex {
    std::string name;
    bool looped = false;

    friend bool operator==(const LoopedVertex&, const LoopedVertex&) = default;
};

/// Simple graph whose vertices carry a payload `V`.
///
/// Vertex identity is the position in the vertex list; names exist for I/O
/// and for move descriptors. The adjacency matrix always has a zero diagonal.
template <class V>
class BasicGraph {
public:
    using vertex_type = V;

    BasicGraph() = default;

    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] const std::vector<V>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const V& vertex(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return vertices_.at(i).name; }

    /// Replaces the payload of vertex i; the name must stay unique.
    void set_vertex(std::size_t i, V v);

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const noexcept;
    /// Throws UnknownVertex.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;

    /// Appends a vertex; throws DuplicateName or BadLabel.
    std::size_t add_vertex(V v);

    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const noexcept { return adj_.get(i, j); }
    void set_edge(std::size_t i, std::size_t j, bool present);
    void toggle_edge(std::size_t i, std::size_t j);

    [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t i) const;
    [[nodiscard]] std::size_t degree(std::size_t i) const;
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    [[nodiscard]] const Gf2Matrix& adjacency() const noexcept { return adj_; }

    /// Copy without the listed vertices; remaining vertices keep their relative order.
    [[nodiscard]] BasicGraph without(std::span<const std::size_t> indices) const;
    /// Vertex order permuted: position k of the result is vertex order[k] of this graph.
    [[nodiscard]] BasicGraph reordered(std::span<const std::size_t> order) const;

    friend bool operator==(const BasicGraph&, const BasicGraph&) = default;

private:
    std::vector<V> vertices_;
    Gf2Matrix adj_;
};

using LabeledGraph = BasicGraph<LabeledVertex>;
using LoopedGraph = BasicGraph<LoopedVertex>;

/// A(G): a_ii = framing, a_ij = adjacency.
[[nodiscard]] Gf2Matrix adjacency_matrix(const LabeledGraph& g);
/// A(L): a_ii = 1 iff looped, a_ij = adjacency.
[[nodiscard]] Gf2Matrix adjacency_matrix(const LoopedGraph& l);

/// Inverse of adjacency_matrix: diagonal goes to framings/loops, `like` supplies names and signs.
[[nodiscard]] LabeledGraph labeled_from_matrix(const Gf2Matrix& m, const LabeledGraph& like);
[[nodiscard]] LoopedGraph looped_from_matrix(const Gf2Matrix& m, const LoopedGraph& like);

/// Toggles every edge between two distinct neighbours of v.
template <class V>
[[nodiscard]] BasicGraph<V> local_complement(const BasicGraph<V>& g, std::size_t v);
template <class V>
[[nodiscard]] BasicGraph<V> local_complement(const BasicGraph<V>& g, std::string_view v);

/// Toggles {x,y} for x in N(u), y in N(v), x,y outside {u,v}, unless both lie in N(u) and N(v).
/// Unlike the textbook pivot, u and v keep their own neighbourhoods.
template <class V>
[[nodiscard]] BasicGraph<V> pivot(const BasicGraph<V>& g, std::size_t u, std::size_t v);
template <class V>
[[nodiscard]] BasicGraph<V> pivot(const BasicGraph<V>& g, std::string_view u, std::string_view v);

/// Small integer summarising a vertex payload (labels or loop flag) for canonical forms.
[[nodiscard]] std::uint32_t label_code(const LabeledVertex& v) noexcept;
[[nodiscard]] std::uint32_t label_code(const LoopedVertex& v) noexcept;

struct CanonicalLabeling {
    std::string key;
    /// order[k] is the vertex placed at canonical position k.
    std::vector<std::size_t> order;
};

inline constexpr std::size_t kCanonicalBound = 12;
inline constexpr std::size_t kCanonicalHardLimit = 64;

/// Canonical ordering of an abstract graph given by 64-bit adjacency rows and vertex colours.
/// The key is the lexicographic minimum of (colour vector, lower-triangle adjacency rows)
/// over orderings compatible with the colour-refinement partition.
[[nodiscard]] CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> adjacency,
                                                   std::span<const std::uint32_t> colours);

template <class V>
[[nodiscard]] CanonicalLabeling canonical_labeling(const BasicGraph<V>& g, bool respect_labels = true);

/// Byte string equal for two graphs iff they are isomorphic with labels (or loops) preserved.
/// Throws TooLarge above `bound` vertices.
template <class V>
[[nodiscard]] std::string canonical_form(const BasicGraph<V>& g, std::size_t bound = kCanonicalBound);

/// Returns mapping[i] = image in g2 of vertex i of g1, or nothing.
template <class V>
[[nodiscard]] std::optional<std::vector<std::size_t>> are_isomorphic(const BasicGraph<V>& g1, const BasicGraph<V>& g2,
                                                                     bool respect_labels);

/// Same vertex names with the same payloads and the same edges, ignoring vertex order.
template <class V>
[[nodiscard]] bool equal_by_name(const BasicGraph<V>& g1, const BasicGraph<V>& g2);

/// Connected components as sorted vertex-index lists, ordered by smallest member.
template <class V>
[[nodiscard]] std::vector<std::vector<std::size_t>> connected_components(const BasicGraph<V>& g);

/// Induced subgraph on the listed vertices, in the listed order.
template <class V>
[[nodiscard]] BasicGraph<V> induced_subgraph(const BasicGraph<V>& g, std::span<const std::size_t> keep);

/// Smallest name of the form <prefix><k> not used in g.
template <class V>
[[nodiscard]] std::string fresh_name(const BasicGraph<V>& g, std::string_view prefix = "x");

}  // namespace graphlink
