#pragma once

#include <cstdint>
#include <random>

#include "graphlink/chord.hpp"
#include "graphlink/gf2_matrix.hpp"
#include "graphlink/graph.hpp"

namespace graphlink {

using Rng = std::mt19937_64;

/// Vertices named v0, v1, ...; each edge present with probability `density`.
[[nodiscard]] LabeledGraph random_labeled_graph(Rng& rng, std::size_t n, double density = 0.5);
[[nodiscard]] LoopedGraph random_looped_graph(Rng& rng, std::size_t n, double density = 0.5);
/// Rejection-samples labeled graphs until det(A+E) = 1.
[[nodiscard]] LabeledGraph random_graph_knot(Rng& rng, std::size_t n, double density = 0.5);
[[nodiscard]] Gf2Matrix random_symmetric(Rng& rng, std::size_t n);
/// Uniformly shuffled double-occurrence word on chords c0, c1, ...
[[nodiscard]] ChordDiagram random_chord_diagram(Rng& rng, std::size_t chords, bool random_labels = true);

/// Labeled graph on n vertices decoded from an integer: bits of `edges` fill the
/// upper triangle row by row, then bit i of `framings` and `signs` (1 = minus) label vertex i.
[[nodiscard]] LabeledGraph labeled_graph_from_code(std::size_t n, std::uint64_t edges, std::uint32_t framings,
                                                   std::uint32_t signs);
[[nodiscard]] LoopedGraph looped_graph_from_code(std::size_t n, std::uint64_t edges, std::uint32_t loops);

}  // namespace graphlink
