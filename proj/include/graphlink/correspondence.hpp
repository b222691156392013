#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlink/gf2_matrix.hpp"
#include "graphlink/graph.hpp"

namespace graphlink {

/// A symmetric matrix agreeing with its input off the diagonal and having determinant 1.
struct DiagonalCompletion {
    std::vector<int> diagonal;
    Gf2Matrix matrix;

    /// Diagonal as a '0'/'1' string d_0 d_1 ... d_{n-1}.
    [[nodiscard]] std::string bits() const;
};

/// Parses a '0'/'1' string; throws BadLabel on any other character.
[[nodiscard]] std::vector<int> parse_bits(std::string_view bits);
[[nodiscard]] std::string format_bits(const std::vector<int>& bits);

/// Chooses diagonal entries making `a` nonsingular.
///
/// A `preferred` diagonal that already works is returned unchanged; otherwise
/// the result is the lexicographically smallest working diagonal. The search
/// fixes d_0, d_1, ... in turn: once d_0..d_{k-1} are chosen, rows 0..k-1 are
/// fully determined, so a dependency among them rules out every extension.
/// Throws NotSymmetric; InternalContradiction if no completion exists.
[[nodiscard]] DiagonalCompletion complete_diagonal(const Gf2Matrix& a,
                                                   const std::optional<std::vector<int>>& preferred = std::nullopt);

/// Graph-knot -> looped graph: adjacency is the off-diagonal part of (A(G)+E)^{-1},
/// and vertex i carries a loop iff its writhe number is -1. Throws NotAKnot.
[[nodiscard]] LoopedGraph chi(const LabeledGraph& g);

/// Looped graph -> graph-knot: with a completion C of A(L), the graph has
/// adjacency and framings C^{-1} + E and sign_i = w_i (1 - 2 c_ii), where w_i is
/// -1 on looped vertices and +1 otherwise.
[[nodiscard]] LabeledGraph psi(const LoopedGraph& l, const std::optional<std::vector<int>>& preferred_diagonal = std::nullopt);

/// Diagonal of (A(G)+E)^{-1}: the completion that makes psi(chi(g)) reproduce g exactly.
[[nodiscard]] std::vector<int> seed_diagonal(const LabeledGraph& g);

struct RoundTripReport {
    LoopedGraph looped;                 // chi(g)
    std::vector<int> seed;              // diagonal of (A(G)+E)^{-1}
    LabeledGraph recovered;             // psi(chi(g), seed)
    bool psi_chi_exact = false;         // recovered == g
    DiagonalCompletion canonical;       // lexicographically smallest completion of A(chi(g))
    LabeledGraph canonical_knot;        // psi(chi(g)) with that completion
    LoopedGraph looped_again;           // chi(canonical_knot)
    bool chi_psi_exact = false;         // looped_again == looped
};

/// Throws NotAKnot.
[[nodiscard]] RoundTripReport roundtrip_check(const LabeledGraph& g);

}  // namespace graphlink
